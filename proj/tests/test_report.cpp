#include "qcvol/report.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

using namespace qcvol;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string kGolden = QCVOL_GOLDEN_DIR;

} // namespace

TEST_CASE("log2 rendering at known points") {
    CHECK(log2_abs_decimal(Rational(19)) == "4.2479275134435854938");
    CHECK(log2_abs_decimal(Rational(10)) == "3.3219280948873623479");
    CHECK(log2_abs_decimal(Rational(3)) == "1.5849625007211561815");
    CHECK(log2_abs_decimal(Rational(55, 3)) == "4.1963972128035034226");
    CHECK(log2_abs_decimal(Rational(-4, 5)) == "-0.32192809488736234787");
    CHECK(log2_abs_decimal(Rational(1)) == "0");
    CHECK(log2_abs_decimal(Rational(-1)) == "0");
    CHECK(log2_abs_decimal(Rational(2)) == "1.0000000000000000000");
    CHECK(log2_abs_decimal(Rational(1024)) == "10.000000000000000000");
    CHECK(log2_abs_decimal(Rational(1, 2)) == "-1.0000000000000000000");
    CHECK(log2_abs_decimal(parse_rational("9910593494027168197")) == "63.103677163492425812");
    CHECK(log2_abs_decimal(Rational(3), 5) == "1.5850");
    CHECK_THROWS_AS(log2_abs_decimal(Rational(0)), std::domain_error);
}

TEST_CASE("log2 agrees with doubles where doubles suffice") {
    for (long n : {2L, 5L, 7L, 97L, 12345L, 99991L}) {
        const double mine = std::stod(log2_abs_decimal(Rational(n)));
        CHECK(std::abs(mine - std::log2(static_cast<double>(n))) < 1e-12);
    }
}

TEST_CASE("table rows") {
    const TableRow row = table_row(7, VolumeSign::Negative);
    CHECK(row.d == 7);
    CHECK(row.i0 == 1);
    CHECK(row.volume == Rational(-19, 2));
    CHECK(row.volume_log2_abs == "3.2479275134435854938");
}

TEST_CASE("table CSV matches the worked positive block") {
    const auto rows = build_table(3, 8, VolumeSign::Positive);
    CHECK(table_csv(rows) ==
          "d,i0,volume\n"
          "3,1,1\n"
          "4,1,2\n"
          "5,1,7/2\n"
          "6,1,11/2\n"
          "7,2,31/3\n"
          "8,2,19\n");
    const auto single = build_table(9, 9, VolumeSign::Negative);
    CHECK(table_csv(single) == "d,i0,volume\n9,2,-37\n");
}

TEST_CASE("every volume string round-trips") {
    for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive})
        for (const auto& row : build_table(3, 40, sign))
            CHECK(parse_rational(to_string(row.volume)) == row.volume);
}

TEST_CASE("range validation lists offenders") {
    CHECK_THROWS_AS(build_table(8, 7, VolumeSign::Negative), std::domain_error);
    try {
        build_table(1, 4, VolumeSign::Positive);
        FAIL("expected a domain error");
    } catch (const std::domain_error& e) {
        const std::string what = e.what();
        CHECK(what.find("1, 2") != std::string::npos);
    }
}

TEST_CASE("plot records") {
    const auto records = build_plot_records(7, 8);
    REQUIRE(records.size() == 2);
    CHECK(records[0].d == 7);
    CHECK(records[0].i0_min == 1);
    CHECK(records[0].i0_max == 2);
    CHECK(records[0].i0_diff == -1);
    CHECK(records[1].i0_diff == 0);
    CHECK(records[1].log2_abs_vmax == "4.2479275134435854938");
    CHECK(build_plot_records(9, 8).empty());
    CHECK_THROWS_AS(build_plot_records(2, 5), std::domain_error);
}

TEST_CASE("report outputs are byte-deterministic") {
    const auto rows = build_table(7, 10, VolumeSign::Negative);
    CHECK(table_json(rows, VolumeSign::Negative) + "\n" ==
          read_file(kGolden + "/table_7_10_negative.json"));
    CHECK(plot_csv(build_plot_records(7, 10)) == read_file(kGolden + "/plotdata_7_10.csv"));
    CHECK(table_csv(rows) == table_csv(build_table(7, 10, VolumeSign::Negative)));
}

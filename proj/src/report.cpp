#include "qcvol/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qcvol {

namespace {

Int pow10(long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

} // namespace

std::string log2_abs_decimal(const Rational& value, int significant_digits) {
    if (value.is_zero())
        throw std::domain_error("log2 of zero");
    if (significant_digits < 1 || significant_digits > 25)
        throw std::domain_error("supported precision is 1..25 significant digits");

    Int p = value.numerator();
    if (sgn(p) < 0)
        p = -p;
    const Int q = value.denominator();

    // Exponent: p/q in [2^E, 2^(E+1)).
    long exp2 = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
    auto at_least_pow2 = [&](long e) {
        Int lhs = p, rhs = q;
        if (e >= 0)
            rhs <<= static_cast<unsigned long>(e);
        else
            lhs <<= static_cast<unsigned long>(-e);
        return lhs >= rhs;
    };
    if (!at_least_pow2(exp2))
        --exp2;
    if (at_least_pow2(exp2 + 1))
        ++exp2;

    // Mantissa y = (p/q) / 2^exp2 in [1, 2) as a fixed-point integer with
    // frac_bits fraction bits; repeated squaring extracts out_bits bits of
    // log2(y). Truncation error stays below 2^(out_bits - frac_bits).
    const long frac_bits = 256, out_bits = 96;
    Int num = p, den = q;
    if (frac_bits - exp2 >= 0)
        num <<= static_cast<unsigned long>(frac_bits - exp2);
    else
        den <<= static_cast<unsigned long>(exp2 - frac_bits);
    Int y = num / den;
    const Int two_up = Int(1) << static_cast<unsigned long>(frac_bits + 1);
    Int frac = 0;
    for (long t = 0; t < out_bits; ++t) {
        y *= y;
        y >>= static_cast<unsigned long>(frac_bits);
        frac <<= 1;
        if (y >= two_up) {
            y >>= 1;
            frac += 1;
        }
    }

    // log2|value| ~= n / 2^out_bits.
    Int n = Int(exp2);
    n <<= static_cast<unsigned long>(out_bits);
    n += frac;
    if (sgn(n) == 0)
        return "0";
    const bool negative = sgn(n) < 0;
    const Int a = negative ? Int(-n) : n;
    const Int scale = Int(1) << static_cast<unsigned long>(out_bits);

    // Decimal exponent: |log| in [10^e, 10^(e+1)).
    auto at_least_pow10 = [&](long e) {
        if (e >= 0)
            return a >= pow10(e) * scale;
        return a * pow10(-e) >= scale;
    };
    long exp10 = 0;
    while (at_least_pow10(exp10 + 1))
        ++exp10;
    while (!at_least_pow10(exp10))
        --exp10;

    // Round half up to the requested number of significant digits.
    const long shift = significant_digits - 1 - exp10;
    Int round_num = a;
    Int round_den = scale;
    if (shift >= 0)
        round_num *= pow10(shift);
    else
        round_den *= pow10(-shift);
    Int digits_int = (round_num * 2 + round_den) / (round_den * 2);
    if (digits_int >= pow10(significant_digits)) {
        digits_int /= 10;
        ++exp10;
    }
    std::string digits = digits_int.get_str();
    if (static_cast<long>(digits.size()) != significant_digits)
        throw std::logic_error("log2 rendering produced a malformed digit string");

    std::string out;
    if (exp10 >= 0) {
        if (exp10 + 1 >= static_cast<long>(digits.size()))
            out = digits;
        else
            out = digits.substr(0, exp10 + 1) + "." + digits.substr(exp10 + 1);
    } else {
        out = "0." + std::string(-exp10 - 1, '0') + digits;
    }
    return negative ? "-" + out : out;
}

TableRow table_row(int d, VolumeSign sign) {
    const ClosedFormSolution sol = extreme_volume(d, sign);
    return {d, sol.i0, sol.volume, log2_abs_decimal(sol.volume)};
}

namespace {

void check_range(int from, int to) {
    if (from > to)
        throw std::domain_error("inverted range " + std::to_string(from) + ".." +
                                std::to_string(to));
    std::string offenders;
    for (int d = from; d <= to && d < 3; ++d) {
        if (!offenders.empty())
            offenders += ", ";
        offenders += std::to_string(d);
    }
    if (!offenders.empty())
        throw std::domain_error("unsupported dimensions in range: " + offenders +
                                " (extreme volumes require d >= 3)");
}

} // namespace

std::vector<TableRow> build_table(int from, int to, VolumeSign sign) {
    check_range(from, to);
    std::vector<TableRow> rows;
    rows.reserve(to - from + 1);
    for (int d = from; d <= to; ++d)
        rows.push_back(table_row(d, sign));
    return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "d,i0,volume\n";
    for (const auto& row : rows)
        os << row.d << "," << row.i0 << "," << to_string(row.volume) << "\n";
    return os.str();
}

std::string table_json(const std::vector<TableRow>& rows, VolumeSign sign) {
    nlohmann::json j;
    j["sign"] = std::string(to_string(sign));
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["d"] = row.d;
        r["i0"] = row.i0;
        r["volume"] = to_string(row.volume);
        r["volume_log2_abs"] = row.volume_log2_abs;
        arr.push_back(std::move(r));
    }
    j["rows"] = std::move(arr);
    return j.dump();
}

std::vector<PlotRecord> build_plot_records(int from, int to) {
    if (from > to)
        return {};
    check_range(from, to);
    std::vector<PlotRecord> records;
    for (int d = from; d <= to; ++d) {
        const ClosedFormSolution neg = extreme_volume(d, VolumeSign::Negative);
        const ClosedFormSolution pos = extreme_volume(d, VolumeSign::Positive);
        PlotRecord r;
        r.d = d;
        r.i0_min = neg.i0;
        r.i0_max = pos.i0;
        r.i0_diff = neg.i0 - pos.i0;
        r.log2_abs_vmin = log2_abs_decimal(neg.volume);
        r.log2_abs_vmax = log2_abs_decimal(pos.volume);
        records.push_back(std::move(r));
    }
    return records;
}

std::string plot_csv(const std::vector<PlotRecord>& records) {
    std::ostringstream os;
    os << "d,i0_min,i0_max,log2_abs_vmin,log2_abs_vmax,i0_diff\n";
    for (const auto& r : records)
        os << r.d << "," << r.i0_min << "," << r.i0_max << "," << r.log2_abs_vmin << ","
           << r.log2_abs_vmax << "," << r.i0_diff << "\n";
    return os.str();
}

std::string plot_json(const std::vector<PlotRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json item;
        item["d"] = r.d;
        item["i0_min"] = r.i0_min;
        item["i0_max"] = r.i0_max;
        item["log2_abs_vmin"] = r.log2_abs_vmin;
        item["log2_abs_vmax"] = r.log2_abs_vmax;
        item["i0_diff"] = r.i0_diff;
        arr.push_back(std::move(item));
    }
    return arr.dump();
}

} // namespace qcvol

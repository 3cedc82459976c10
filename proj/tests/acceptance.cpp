// Acceptance suite: runs every acceptance criterion end to end and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include "qcvol/closed_form.hpp"
#include "qcvol/grid.hpp"
#include "qcvol/lp/dual.hpp"
#include "qcvol/lp/simplex.hpp"
#include "qcvol/lp_builders.hpp"
#include "qcvol/report.hpp"
#include "qcvol/small_dims.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace qcvol;

namespace {

const std::string kGolden = QCVOL_GOLDEN_DIR;
const std::string kCli = QCVOL_CLI_PATH;

struct Failure {
    std::string message;
};

void require(bool condition, const std::string& message) {
    if (!condition)
        throw Failure{message};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "cannot launch " + cmd);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

struct GoldenRow {
    int d;
    int i0;
    Rational volume;
};

std::vector<GoldenRow> parse_golden(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    std::getline(in, line);
    require(line == "d,i0,volume", "unexpected golden header in " + path);
    std::vector<GoldenRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        rows.push_back({std::stoi(line.substr(0, c1)),
                        std::stoi(line.substr(c1 + 1, c2 - c1 - 1)),
                        parse_rational(line.substr(c2 + 1))});
    }
    return rows;
}

void check_table(VolumeSign sign, const std::string& golden_path, int expected_rows) {
    const auto rows = parse_golden(golden_path);
    require(static_cast<int>(rows.size()) == expected_rows,
            golden_path + " carries the wrong row count");
    for (const auto& row : rows) {
        const ClosedFormSolution sol = extreme_volume(row.d, sign);
        require(sol.i0 == row.i0, "d=" + std::to_string(row.d) + ": i0 " +
                                      std::to_string(sol.i0) + " vs table " +
                                      std::to_string(row.i0));
        require(sol.volume == row.volume, "d=" + std::to_string(row.d) + ": volume " +
                                              to_string(sol.volume) + " vs table " +
                                              to_string(row.volume));
    }
}

int run_criteria() {
    int failed = 0;
    int number = 0;
    auto criterion = [&](const std::string& title, const std::function<void()>& body,
                         double budget_seconds = 0.0) {
        ++number;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            body();
        } catch (const Failure& f) {
            error = f.message;
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && budget_seconds > 0.0 && seconds > budget_seconds)
            error = "exceeded the " + std::to_string(budget_seconds) + "s budget";
        char timing[32];
        std::snprintf(timing, sizeof timing, "%6.2fs", seconds);
        std::cout << "[" << (number < 10 ? " " : "") << number << "] "
                  << (error.empty() ? "PASS" : "FAIL") << "  " << title << "  " << timing;
        if (!error.empty()) {
            std::cout << "  -- " << error;
            ++failed;
        }
        std::cout << "\n";
    };

    criterion(
        "negative volumes d=7..68 match the published table exactly",
        [] { check_table(VolumeSign::Negative, kGolden + "/table1_negative.csv", 62); }, 1.0);

    criterion(
        "positive volumes d=3..68 match the published table exactly",
        [] { check_table(VolumeSign::Positive, kGolden + "/table2_positive.csv", 66); }, 1.0);

    criterion("analytic minima for d=3..6 return the printed tuples", [] {
        struct Expected {
            int d;
            Rational volume, a, b;
            std::vector<Rational> q;
        };
        const std::vector<Expected> wanted = {
            {3, Rational(-4, 5), Rational(2, 5), Rational(4, 5),
             {0, 0, Rational(2, 5), Rational(2, 5)}},
            {4, Rational(-9, 7), Rational(3, 7), Rational(6, 7),
             {0, 0, 0, Rational(3, 7), Rational(3, 7)}},
            {5, Rational(-32, 13), Rational(8, 13), Rational(12, 13),
             {0, 0, Rational(4, 13), Rational(4, 13), Rational(8, 13), Rational(8, 13)}},
            {6, Rational(-75, 16), Rational(5, 8), Rational(15, 16),
             {0, 0, 0, Rational(5, 16), Rational(5, 16), Rational(5, 8), Rational(5, 8)}},
        };
        for (const auto& w : wanted) {
            const SmallDimSolution sol = solve_small_min(w.d);
            require(sol.volume == w.volume, "d=" + std::to_string(w.d) + " volume " +
                                                to_string(sol.volume));
            require(sol.a == w.a && sol.b == w.b,
                    "d=" + std::to_string(w.d) + " box (" + to_string(sol.a) + ", " +
                        to_string(sol.b) + ")");
            require(sol.q_levels == w.q, "d=" + std::to_string(w.d) + " level values");
        }
    });

    criterion("worked realizations in d=7 and d=8 validate and carry the mass", [] {
        {
            const ClosedFormSolution sol = extreme_volume(7, VolumeSign::Negative);
            require(sol.box_edge_a == Rational(1, 2) && sol.box_edge_b == Rational(1),
                    "d=7 box");
            require(sol.delta == std::vector<Rational>{0, 0, 0, Rational(1, 2), 0, 0,
                                                       Rational(1, 2)},
                    "d=7 steps");
            require(sol.q_levels == std::vector<Rational>{0, 0, 0, 0, Rational(1, 2),
                                                          Rational(1, 2), Rational(1, 2), 1},
                    "d=7 levels");
            const GridQuasiCopula grid = symmetric_grid(sol);
            require(validate(grid).empty(), "d=7 grid violates a constraint");
            require(volume(grid) == Rational(-19, 2), "d=7 volume " + to_string(volume(grid)));
        }
        {
            const ClosedFormSolution sol = extreme_volume(8, VolumeSign::Positive);
            require(sol.box_edge_a == Rational(2, 3) && sol.box_edge_b == Rational(1),
                    "d=8 box");
            require(sol.delta == std::vector<Rational>{0, 0, 0, Rational(1, 3), 0,
                                                       Rational(1, 3), 0, Rational(1, 3)},
                    "d=8 steps");
            require(sol.q_levels ==
                        std::vector<Rational>{0, 0, 0, 0, Rational(1, 3), Rational(1, 3),
                                              Rational(2, 3), Rational(2, 3), 1},
                    "d=8 levels");
            const GridQuasiCopula grid = symmetric_grid(sol);
            require(validate(grid).empty(), "d=8 grid violates a constraint");
            require(volume(grid) == Rational(19), "d=8 volume " + to_string(volume(grid)));
        }
    });

    criterion("exact simplex on ReducedLp equals the closed form (neg 7..20, pos 3..20)", [] {
        for (int d = 7; d <= 20; ++d) {
            const Rational lp =
                lp::solve(build(LpFamily::reduced(), d, VolumeSign::Negative)).objective_value;
            const Rational closed = extreme_volume(d, VolumeSign::Negative).volume;
            require(lp == closed, "negative d=" + std::to_string(d) + ": " + to_string(lp) +
                                      " vs " + to_string(closed));
        }
        for (int d = 3; d <= 20; ++d) {
            const Rational lp =
                lp::solve(build(LpFamily::reduced(), d, VolumeSign::Positive)).objective_value;
            const Rational closed = extreme_volume(d, VolumeSign::Positive).volume;
            require(lp == closed, "positive d=" + std::to_string(d) + ": " + to_string(lp) +
                                      " vs " + to_string(closed));
        }
    }, 60.0);

    criterion("FullLp = SymmetricLp = ReducedLp for d in {3,4,5}, both signs", [] {
        for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive}) {
            for (int d = 3; d <= 5; ++d) {
                const Rational full =
                    lp::solve(build(LpFamily::full(), d, sign)).objective_value;
                const Rational sym =
                    lp::solve(build(LpFamily::symmetric(), d, sign)).objective_value;
                const Rational red =
                    lp::solve(build(LpFamily::reduced(), d, sign)).objective_value;
                require(full == sym && sym == red,
                        std::string(to_string(sign)) + " d=" + std::to_string(d) + ": " +
                            to_string(full) + " / " + to_string(sym) + " / " + to_string(red));
            }
        }
    }, 120.0);

    criterion("zero duality gap and complementary slackness for d <= 14, both signs", [] {
        for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive}) {
            for (int d = 2; d <= 14; ++d) {
                const lp::LpModel primal = build(LpFamily::reduced(), d, sign);
                const lp::LpModel dual = build(LpFamily::dual_reduced(), d, sign);
                const lp::LpSolution psol = lp::solve(primal);
                const lp::LpSolution dsol = lp::solve(dual);
                const Rational dual_signed = sign == VolumeSign::Negative
                                                 ? -dsol.objective_value
                                                 : dsol.objective_value;
                require(psol.objective_value == dual_signed,
                        "gap at d=" + std::to_string(d) + " " + std::string(to_string(sign)) +
                            ": " + to_string(psol.objective_value) + " vs " +
                            to_string(dual_signed));
                require(lp::check_complementary_slackness(primal, psol, dsol),
                        "slackness failed at d=" + std::to_string(d) + " " +
                            std::string(to_string(sign)));
            }
        }
    });

    criterion("200 random auxiliary instances: closed form = simplex, crossing unique", [] {
        std::mt19937_64 rng(20250811);
        std::uniform_int_distribution<long> coeff(1, 50);
        std::uniform_int_distribution<int> ksize(1, 12);
        std::uniform_int_distribution<int> rsize(0, 6);
        for (int iter = 0; iter < 200; ++iter) {
            const int k = ksize(rng);
            std::vector<Rational> c;
            for (int i = 0; i < k; ++i)
                c.push_back(Rational(coeff(rng)));
            std::sort(c.begin(), c.end());
            if (k >= 2 && c.front() == c.back())
                c.back() += 1;
            std::vector<Rational> e;
            for (int i = rsize(rng); i > 0; --i)
                e.push_back(Rational(-coeff(rng)));
            const long ck = c.back().numerator().get_si();
            std::uniform_int_distribution<long> arange(-ck + 1, ck);
            const AuxiliaryInstance inst(c, e, Rational(arange(rng)));

            const AuxiliarySolution aux = solve_auxiliary(inst);
            const lp::LpSolution lpsol = lp::solve(build_auxiliary_lp(inst));
            require(lpsol.status == lp::SolveStatus::Optimal,
                    "instance " + std::to_string(iter) + " did not solve");
            require(lpsol.objective_value == aux.w,
                    "instance " + std::to_string(iter) + ": " + to_string(aux.w) + " vs " +
                        to_string(lpsol.objective_value));

            const WScan scan = scan_w_sequence(inst.c, inst.alpha);
            int hits = 0;
            for (int i = 1; i <= k; ++i) {
                const Rational lo = (k - i >= 1) ? inst.c[k - i - 1] : Rational(0);
                const Rational hi = inst.c[k - i];
                if (scan.w[i - 1] >= lo && scan.w[i - 1] < hi) {
                    ++hits;
                    require(i == scan.i0, "crossing index mismatch");
                }
                if (i < k && scan.w[i - 1] >= lo)
                    require(scan.w[i] >= lo, "threshold crossing is not monotone");
            }
            require(hits == 1, "crossing window hit " + std::to_string(hits) + " times");
        }
    });

    criterion("even-dimension relations d=8..200 and terminal w identities to 200", [] {
        for (int d = 8; d <= 200; d += 2) {
            const MinMaxComparison cmp = compare_min_max(d);
            require(cmp.i0_diff == 0 || cmp.i0_diff == 1,
                    "d=" + std::to_string(d) + " diff " + std::to_string(cmp.i0_diff));
            if (cmp.i0_diff == 0) {
                require(cmp.volume_gap.has_value(), "missing gap at d=" + std::to_string(d));
                require(*cmp.volume_gap == Rational(2, cmp.i0_min + 1),
                        "d=" + std::to_string(d) + " gap " + to_string(*cmp.volume_gap));
            }
        }
        for (int d = 3; d <= 200; ++d)
            require(terminal_w(d, VolumeSign::Positive) ==
                        extreme_volume(d, VolumeSign::Positive).w_sequence.back(),
                    "positive terminal w at d=" + std::to_string(d));
        for (int d = 7; d <= 200; ++d)
            require(terminal_w(d, VolumeSign::Negative) ==
                        extreme_volume(d, VolumeSign::Negative).w_sequence.back(),
                    "negative terminal w at d=" + std::to_string(d));
    });

    criterion("the l_d = 0 dual branch is optimal exactly for d in {3,4,5,6}", [] {
        for (int d = 3; d <= 14; ++d) {
            const Rational overall =
                lp::solve(build(LpFamily::dual_reduced(), d, VolumeSign::Negative))
                    .objective_value;
            const lp::LpSolution branch =
                lp::solve(build(LpFamily::simplified_dual_branch(true), d, VolumeSign::Negative));
            const bool optimal = branch.status == lp::SolveStatus::Optimal &&
                                 branch.objective_value == overall;
            require(optimal == (d <= 6),
                    "d=" + std::to_string(d) + ": branch " +
                        std::string(lp::to_string(branch.status)) +
                        (branch.status == lp::SolveStatus::Optimal
                             ? " " + to_string(branch.objective_value) + " vs overall " +
                                   to_string(overall)
                             : ""));
        }
    });

    criterion("CLI tables byte-match the goldens; plotdata reports the i0 differences", [] {
        const CliResult neg = run_cli("table --from 7 --to 68 --sign negative");
        require(neg.exit_code == 0, "table negative exited " + std::to_string(neg.exit_code));
        require(neg.output == read_file(kGolden + "/table1_negative.csv"),
                "negative table bytes differ from the golden file");
        const CliResult pos = run_cli("table --from 3 --to 68 --sign positive");
        require(pos.exit_code == 0, "table positive exited " + std::to_string(pos.exit_code));
        require(pos.output == read_file(kGolden + "/table2_positive.csv"),
                "positive table bytes differ from the golden file");

        const CliResult plot = run_cli("plotdata --from 7 --to 8");
        require(plot.exit_code == 0, "plotdata exited " + std::to_string(plot.exit_code));
        std::istringstream lines(plot.output);
        std::string header, d7, d8;
        std::getline(lines, header);
        std::getline(lines, d7);
        std::getline(lines, d8);
        require(header == "d,i0_min,i0_max,log2_abs_vmin,log2_abs_vmax,i0_diff",
                "plotdata header " + header);
        require(d7.substr(0, 6) == "7,1,2," && d7.substr(d7.size() - 3) == ",-1",
                "d=7 record " + d7);
        require(d8.substr(0, 6) == "8,2,2," && d8.substr(d8.size() - 2) == ",0",
                "d=8 record " + d8);

        // Exit-code contract.
        require(run_cli("solve --dim 2 --sign negative").exit_code == 2,
                "solve --dim 2 must exit 2");
        require(run_cli("realize --dim 21 --sign positive --out /dev/null").exit_code == 2,
                "realize --dim 21 must exit 2");
        require(run_cli("verify --reduced-max 7 --full-max 3 --corrupt").exit_code == 3,
                "corrupted verify must exit 3");
        require(run_cli("verify --reduced-max 8 --full-max 3").exit_code == 0,
                "verify must exit 0");
    });

    return failed;
}

} // namespace

int main() {
    const int failed = run_criteria();
    std::cout << (failed == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failed) + " criteria FAILED")
              << "\n";
    return failed == 0 ? 0 : 1;
}

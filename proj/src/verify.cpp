#include "qcvol/verify.hpp"

#include "qcvol/closed_form.hpp"
#include "qcvol/grid.hpp"
#include "qcvol/lp/dual.hpp"
#include "qcvol/lp/simplex.hpp"
#include "qcvol/lp_builders.hpp"
#include "qcvol/small_dims.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcvol {

using lp::LpModel;
using lp::LpSolution;
using lp::SolveStatus;

bool VerifyReport::all_pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const VerifyLine& l) { return l.pass; });
}

namespace {

struct Runner {
    VerifyReport report;

    void add(const std::string& check, bool pass, const std::string& detail) {
        report.lines.push_back({check, pass, detail});
    }

    void equal_values(const std::string& check, const Rational& expected, const Rational& got) {
        if (expected == got)
            add(check, true, to_string(expected));
        else
            add(check, false, to_string(expected) + " vs " + to_string(got));
    }
};

std::string label(const char* what, int d, VolumeSign sign) {
    return std::string(what) + " d=" + std::to_string(d) + " " + std::string(to_string(sign));
}

Rational corrupted(const Rational& v, bool corrupt) {
    return corrupt ? v + Rational(1) : v;
}

// Signed optimum of the reduced dual: the program minimizes, the negative
// case carries an outer minus.
Rational signed_dual_value(VolumeSign sign, const Rational& dual_opt) {
    return sign == VolumeSign::Negative ? -dual_opt : dual_opt;
}

} // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.full_max > 6)
        throw std::domain_error("the per-vertex program is limited to d <= 6");
    if (options.reduced_max < 3)
        throw std::domain_error("reduced-program cap must be at least 3");
    const int R = options.reduced_max;
    Runner run;

    // Closed form vs the exact simplex on ReducedLp. The model only asks
    // for a <= b, so the strictness of the box is asserted on the optimum.
    for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive}) {
        const int lo = sign == VolumeSign::Negative ? 7 : 3;
        for (int d = lo; d <= R; ++d) {
            const Rational closed =
                corrupted(extreme_volume(d, sign).volume, options.corrupt_closed_form);
            const LpSolution lpsol = lp::solve(build(LpFamily::reduced(), d, sign));
            if (!(lpsol.value("a") < lpsol.value("b"))) {
                run.add(label("oracle ReducedLp", d, sign), false,
                        "optimum has a degenerate box a=" + to_string(lpsol.value("a")));
                continue;
            }
            run.equal_values(label("oracle ReducedLp", d, sign), closed, lpsol.objective_value);
        }
    }

    // Analytic small dimensions vs the symmetric program.
    for (int d = 3; d <= 6; ++d) {
        const Rational analytic =
            corrupted(solve_small_min(d).volume, options.corrupt_closed_form);
        const LpSolution lpsol = lp::solve(build(LpFamily::symmetric(), d, VolumeSign::Negative));
        run.equal_values(label("analytic SymmetricLp", d, VolumeSign::Negative), analytic,
                         lpsol.objective_value);
    }

    // Strong duality and complementary slackness on the reduced pair.
    for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive}) {
        for (int d = 2; d <= R; ++d) {
            const LpModel primal = build(LpFamily::reduced(), d, sign);
            const LpModel dual = build(LpFamily::dual_reduced(), d, sign);
            const LpSolution psol = lp::solve(primal);
            const LpSolution dsol = lp::solve(dual);
            const Rational dual_as_primal = signed_dual_value(sign, dsol.objective_value);
            if (psol.objective_value != dual_as_primal) {
                run.add(label("duality gap", d, sign), false,
                        to_string(psol.objective_value) + " vs " + to_string(dual_as_primal));
                continue;
            }
            bool slack = false;
            std::string detail = to_string(psol.objective_value);
            try {
                slack = lp::check_complementary_slackness(primal, psol, dsol);
            } catch (const std::exception& e) {
                detail = e.what();
            }
            run.add(label("duality+slackness", d, sign), slack, detail);
        }
    }

    // The mechanical dual of ReducedLp coincides with DualReduced.
    for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive}) {
        for (int d = 2; d <= std::min(R, 12); ++d) {
            const LpModel mech = lp::dualize(lp::standardize(build(LpFamily::reduced(), d, sign)));
            const LpModel direct = build(LpFamily::dual_reduced(), d, sign);
            run.add(label("dual-form fidelity", d, sign), lp::structurally_equal(mech, direct),
                    mech.name);
        }
    }

    // Pinning y2 = y1 + d*y3, then y1 = 0, must not move the dual optimum.
    for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive}) {
        for (int d = 2; d <= R; ++d) {
            const LpModel dual = build(LpFamily::dual_reduced(), d, sign);
            const Rational base = lp::solve(dual).objective_value;
            LpModel pinned_y2 = dual;
            {
                std::vector<Rational> row(pinned_y2.num_vars(), Rational(0));
                row[pinned_y2.var_index("y2")] = 1;
                row[pinned_y2.var_index("y1")] = -1;
                row[pinned_y2.var_index("y3")] = Rational(-d);
                pinned_y2.add_row("pin_y2", std::move(row), lp::Relation::Equal, Rational(0));
            }
            LpModel pinned_y1 = dual;
            {
                std::vector<Rational> row(pinned_y1.num_vars(), Rational(0));
                row[pinned_y1.var_index("y1")] = 1;
                pinned_y1.add_row("pin_y1", std::move(row), lp::Relation::Equal, Rational(0));
            }
            const Rational v2 = lp::solve(pinned_y2).objective_value;
            const Rational v1 = lp::solve(pinned_y1).objective_value;
            const bool ok = v2 == base && v1 == base;
            run.add(label("dual pinning", d, sign), ok,
                    ok ? to_string(base)
                       : to_string(base) + " vs " + to_string(v2) + " / " + to_string(v1));
        }
    }

    // Branch behavior of the top step: for the negative sign the l_d = 0
    // branch is the optimal one exactly in dimensions 3..6.
    for (int d = 3; d <= std::min(R, 14); ++d) {
        const Rational overall =
            lp::solve(build(LpFamily::dual_reduced(), d, VolumeSign::Negative)).objective_value;
        const LpSolution zero =
            lp::solve(build(LpFamily::simplified_dual_branch(true), d, VolumeSign::Negative));
        const bool zero_optimal =
            zero.status == SolveStatus::Optimal && zero.objective_value == overall;
        const bool expected = d <= 6;
        run.add(label("branch l_d=0", d, VolumeSign::Negative), zero_optimal == expected,
                std::string(to_string(zero.status)) +
                    (zero.status == SolveStatus::Optimal
                         ? " " + to_string(zero.objective_value) + " vs " + to_string(overall)
                         : ""));
    }
    for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive}) {
        for (int d = (sign == VolumeSign::Negative ? 7 : 3); d <= std::min(R, 14); ++d) {
            const Rational overall =
                lp::solve(build(LpFamily::dual_reduced(), d, sign)).objective_value;
            const LpSolution tied =
                lp::solve(build(LpFamily::simplified_dual_branch(false), d, sign));
            const bool ok =
                tied.status == SolveStatus::Optimal && tied.objective_value == overall;
            run.add(label("branch l_d tied", d, sign), ok,
                    tied.status == SolveStatus::Optimal ? to_string(tied.objective_value)
                                                        : std::string(to_string(tied.status)));
        }
    }

    // Symmetric grids of the solutions pass the full constraint check and
    // reproduce the volume.
    for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive}) {
        for (int d = 3; d <= std::min(R, 16); ++d) {
            const ClosedFormSolution sol = extreme_volume(d, sign);
            const GridQuasiCopula grid = symmetric_grid(sol);
            const auto violations = validate(grid);
            const Rational vol = volume(grid);
            const bool ok = violations.empty() && vol == sol.volume;
            run.add(label("grid realization", d, sign), ok,
                    violations.empty() ? to_string(vol) + " vs " + to_string(sol.volume)
                                       : describe(violations.front()));
        }
    }

    // Full equivalence chain on small dimensions.
    for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive}) {
        for (int d = 3; d <= options.full_max; ++d) {
            const Rational full =
                lp::solve(build(LpFamily::full(), d, sign)).objective_value;
            const Rational symmetric =
                lp::solve(build(LpFamily::symmetric(), d, sign)).objective_value;
            const Rational reduced =
                lp::solve(build(LpFamily::reduced(), d, sign)).objective_value;
            const bool ok = full == symmetric && symmetric == reduced;
            run.add(label("full chain", d, sign), ok,
                    to_string(full) + " / " + to_string(symmetric) + " / " + to_string(reduced));
        }
    }

    // The closed-form dual point is feasible and recovers the realization.
    for (VolumeSign sign : {VolumeSign::Negative, VolumeSign::Positive}) {
        const int lo = sign == VolumeSign::Negative ? 7 : 3;
        for (int d = lo; d <= R; ++d) {
            const ClosedFormSolution sol = extreme_volume(d, sign);
            const LpSolution dual_point = closed_form_dual_solution(d, sign);
            const LpModel dual = build(LpFamily::dual_reduced(), d, sign);
            bool ok = lp::satisfies(dual, dual_point);
            std::string detail = ok ? "" : "dual point infeasible";
            if (ok) {
                try {
                    const RecoveredPrimal rec = recover_primal_by_slackness(d, sign, dual_point);
                    ok = rec.a == sol.box_edge_a && rec.b == Rational(1) &&
                         rec.q0.is_zero() && rec.delta == sol.delta;
                    detail = "a=" + to_string(rec.a) + " b=" + to_string(rec.b);
                } catch (const std::exception& e) {
                    ok = false;
                    detail = e.what();
                }
            }
            run.add(label("primal recovery", d, sign), ok, detail);
        }
    }

    return run.report;
}

} // namespace qcvol

#pragma once

#include "qcvol/closed_form.hpp"
#include "qcvol/lp/model.hpp"
#include "qcvol/small_dims.hpp"

#include <string>

namespace qcvol {

/// The linear-program forms of the extreme-volume problem, from the full
/// per-vertex program down to the reduced dual used by the solver.
struct LpFamily {
    enum class Kind {
        FullLp,               // box edges and one value per vertex (d <= 6)
        SymmetricLp,          // one value per level
        ReducedLp,            // level steps delta_i = q_i - q_{i-1}
        DualReduced,          // dual of ReducedLp
        SimplifiedDualBranch, // DualReduced after eliminating y1, y2; one
                              // branch of the top-step case split
        FinalDual,            // the branch with l_d tied, in the w variable
    };

    Kind kind = Kind::ReducedLp;
    bool l_d_zero = false; // branch selector, SimplifiedDualBranch only

    static LpFamily full() { return {Kind::FullLp, false}; }
    static LpFamily symmetric() { return {Kind::SymmetricLp, false}; }
    static LpFamily reduced() { return {Kind::ReducedLp, false}; }
    static LpFamily dual_reduced() { return {Kind::DualReduced, false}; }
    static LpFamily simplified_dual_branch(bool l_d_zero) {
        return {Kind::SimplifiedDualBranch, l_d_zero};
    }
    static LpFamily final_dual() { return {Kind::FinalDual, false}; }
};

std::string to_string(const LpFamily& family);

/// Instantiates a family at dimension d. FullLp is limited to d <= 6; the
/// l_d = 0 branch exists for the negative sign only.
lp::LpModel build(LpFamily family, int d, VolumeSign sign);

/// The auxiliary minimization as a literal linear program:
/// min w subject to sum(y) + sum(z) = w + alpha, y_i + w >= c_i,
/// z_i + w >= e_i, all variables nonnegative.
lp::LpModel build_auxiliary_lp(const AuxiliaryInstance& inst);

/// The optimal solution of (DualReduced, d, sign) constructed in closed form
/// (not by the solver): y1 = 0, y3 = w/(d-1), y2 = d*w/(d-1), l_j = c - w on
/// the active rows, l_d tied to y3.
lp::LpSolution closed_form_dual_solution(int d, VolumeSign sign);

struct RecoveredPrimal {
    Rational a;
    Rational b;
    Rational q0;
    std::vector<Rational> delta;
};

/// Reads an optimal (DualReduced, d, sign) solution and rebuilds the primal
/// optimum of ReducedLp from tightness: rows with a positive multiplier pin
/// their step to the box width, slack dual rows force their step to zero,
/// and the two balance rows determine the box. The result is verified
/// against ReducedLp before returning.
RecoveredPrimal recover_primal_by_slackness(int d, VolumeSign sign,
                                            const lp::LpSolution& dual_sol);

} // namespace qcvol

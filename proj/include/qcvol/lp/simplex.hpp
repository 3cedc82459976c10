#pragma once

#include "qcvol/lp/model.hpp"

namespace qcvol::lp {

/// Exact primal simplex over rationals (two phases, Bland's pivoting rule).
/// Returns the optimum with a basic feasible primal, or the Infeasible /
/// Unbounded status. Throws std::invalid_argument on malformed models.
LpSolution solve(const LpModel& model);

} // namespace qcvol::lp

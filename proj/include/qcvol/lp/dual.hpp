#pragma once

#include "qcvol/lp/model.hpp"

namespace qcvol::lp {

/// Inequality standard form: maximize c'x subject to Ax <= b, x >= 0.
bool is_standard_form(const LpModel& model);

/// Converts any model to inequality standard form: the sense flips through
/// objective negation, >= rows are negated, = rows split into a <= pair
/// (the twin row gets a "~" suffix), and free variables split into a
/// difference of two nonnegative ones. Idempotent on standard-form input.
LpModel standardize(const LpModel& model);

/// Mechanical dual of a standard-form program:
///   max {c'x : Ax <= b, x >= 0}  ->  min {b'y : A'y >= c, y >= 0}.
/// Dual variables are named after primal rows and dual rows after primal
/// variables. Throws std::invalid_argument unless the input is standard.
LpModel dualize(const LpModel& model);

/// Exact complementary slackness for a primal with <= rows and nonnegative
/// variables and its dual solution (dual values paired with primal rows by
/// position): every row with a nonzero dual value must be tight, and every
/// nonzero primal variable must have a tight dual constraint. Throws
/// std::invalid_argument on dimension mismatch, non-optimal inputs, or a
/// duality gap between the two objective values.
bool check_complementary_slackness(const LpModel& primal, const LpSolution& primal_sol,
                                   const LpSolution& dual_sol);

} // namespace qcvol::lp

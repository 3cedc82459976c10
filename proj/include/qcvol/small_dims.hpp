#pragma once

#include "qcvol/rational.hpp"

#include <vector>

namespace qcvol {

/// Analytic solution of the minimal-volume problem in a dimension where the
/// optimal box does not reach the upper corner of the unit cube (b < 1).
struct SmallDimSolution {
    int d = 0;
    Rational a;
    Rational b;
    std::vector<Rational> q_levels; // d + 1 entries
    Rational volume;                // negative
};

/// One active-set candidate of the analytic branch enumeration: the largest
/// tight_count thresholds are met with equality, the rest are slack.
struct SmallDimCandidate {
    int tight_count = 0;
    Rational y3;
    bool feasible = false;
};

std::vector<SmallDimCandidate> small_min_candidates(int d);

/// Minimal volume for d in 3..6 by enumerating the candidate active sets,
/// discarding infeasible ones, and reconstructing the box and level values
/// from the surviving branch.
SmallDimSolution solve_small_min(int d);

} // namespace qcvol

#pragma once

#include "qcvol/rational.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace qcvol {

/// Which extreme of the box volume is sought.
enum class VolumeSign { Negative, Positive };

std::string_view to_string(VolumeSign sign);
VolumeSign volume_sign_from_string(std::string_view text);

/// Data of the generic auxiliary minimization: nondecreasing positive
/// coefficients c, negative values e (which never influence the optimum),
/// and a balance offset alpha with -c_k < alpha <= c_k.
struct AuxiliaryInstance {
    std::vector<Rational> c;
    std::vector<Rational> e;
    Rational alpha;

    AuxiliaryInstance(std::vector<Rational> c, std::vector<Rational> e, Rational alpha);
};

/// Optimal tuple of the auxiliary minimization: w is the optimum, the first
/// k - i0 y's vanish, the rest equal c_i - w, and every z vanishes.
struct AuxiliarySolution {
    int i0 = 0;
    Rational w;
    std::vector<Rational> y;
    std::vector<Rational> z;
};

/// Threshold scan over the averaged suffix sums of c:
///   w_i = (c_k + ... + c_{k-i+1} - alpha) / (i + 1),
/// with i0 the smallest index where w_i reaches the next coefficient
/// threshold c_{k-i} (c_0 = 0).
struct WScan {
    std::vector<Rational> w;
    int i0 = 0;
};
WScan scan_w_sequence(const std::vector<Rational>& c, const Rational& alpha);

/// Full description of an extreme-volume solution in dimension d.
///
/// For the analytic negative cases 3 <= d <= 6 the box upper edge is below 1
/// and box_edge_b carries it; coeffs is then empty and w_sequence holds the
/// candidate objective values of the analytic branch enumeration. Everywhere
/// else box_edge_b == 1, box_edge_a == i0/(i0+1), every delta entry is 0 or
/// 1/(i0+1), and volume == -w_{i0} (negative) or w_{i0} (positive).
struct ClosedFormSolution {
    int d = 0;
    VolumeSign sign = VolumeSign::Negative;
    std::vector<Int> coeffs;
    std::vector<Rational> w_sequence;
    int i0 = 0;
    Rational volume;
    Rational box_edge_a;
    Rational box_edge_b;
    std::vector<Rational> delta;
    std::vector<Rational> q_levels;
};

/// Coefficient vector (c_1, ..., c_k) of binomials for dimension d.
/// Negative requires d >= 7, Positive requires d >= 3.
std::vector<Int> coeffs(int d, VolumeSign sign);

AuxiliarySolution solve_auxiliary(const AuxiliaryInstance& inst);

/// Extreme volume of a box over all d-variate quasi-copulas, with one
/// symmetric realization. Negative supports d >= 3 (3..6 analytically),
/// Positive supports d >= 3; d = 2 is rejected for both signs.
ClosedFormSolution extreme_volume(int d, VolumeSign sign);

/// Prefix sums of a step vector: (0, d_1, d_1+d_2, ...).
std::vector<Rational> q_levels(const std::vector<Rational>& delta);

/// w value at the maximal scan index, in closed form:
///   negative: (2^(d-2) - 1) / (floor(d/2) + 1)        (d >= 7)
///   positive: 2^(d-1)/d for even d, 2^(d-2)/((d+1)/2) for odd d   (d >= 3)
Rational terminal_w(int d, VolumeSign sign);

/// Relation between the negative and positive solutions in even dimensions
/// d >= 8: i0_diff = i0_min - i0_max lies in {0, 1}, and when it is 0 the
/// positive optimum exceeds the absolute negative one by exactly 2/(i0+1).
struct MinMaxComparison {
    int i0_min = 0;
    int i0_max = 0;
    int i0_diff = 0;
    std::optional<Rational> volume_gap;
};
MinMaxComparison compare_min_max(int d);

} // namespace qcvol

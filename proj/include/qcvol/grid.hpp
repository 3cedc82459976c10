#pragma once

#include "qcvol/closed_form.hpp"
#include "qcvol/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qcvol {

/// Selects one vertex of a d-box: per coordinate, 0 picks the lower endpoint
/// and 1 the upper one. Coordinate 1 is the most significant bit, so the
/// bitstring reads coordinate-first and bits() enumerates vertices 0..2^d-1.
class MultiIndex {
public:
    MultiIndex(int dim, unsigned bits);

    int dim() const { return dim_; }
    unsigned bits() const { return bits_; }
    int ones() const;
    /// (-1)^(d - ones)
    int sign() const { return (dim_ - ones()) % 2 == 0 ? 1 : -1; }
    /// Coordinate k (1-based) sits at the upper endpoint.
    bool is_upper(int coord) const;
    /// Same index with coordinate k moved to the upper endpoint.
    MultiIndex raised(int coord) const;
    std::string bitstring() const;
    static MultiIndex from_bitstring(std::string_view text);

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.dim_ == b.dim_ && a.bits_ == b.bits_;
    }

private:
    int dim_;
    unsigned bits_;
};

/// A d-box inside the unit cube with strictly ordered edges: 0 <= a_i < b_i <= 1.
struct Box {
    std::vector<Rational> lower;
    std::vector<Rational> upper;

    Box(std::vector<Rational> a, std::vector<Rational> b);
    int dim() const { return static_cast<int>(lower.size()); }
    std::vector<Rational> vertex(const MultiIndex& index) const;
};

/// Values of a quasi-copula on all 2^d vertices of a box. Immutable.
class GridQuasiCopula {
public:
    GridQuasiCopula(Box box, std::vector<Rational> values);

    int dim() const { return box_.dim(); }
    const Box& box() const { return box_; }
    const Rational& value(const MultiIndex& index) const { return values_[index.bits()]; }
    const std::vector<Rational>& values() const { return values_; }

private:
    Box box_;
    std::vector<Rational> values_;
};

/// Lower admissible bound at a point: sum(x) - d + 1.
Rational g_lower(const std::vector<Rational>& x);
/// Upper admissible bound at a point: min(x).
Rational h_upper(const std::vector<Rational>& x);

/// Alternating vertex sum: sum over I of sign(I) * q_I.
Rational volume(const GridQuasiCopula& grid);

enum class ViolationKind {
    VertexLowerBound, // max(0, g_lower) <= q failed
    VertexUpperBound, // q <= h_upper failed
    EdgeMonotonicity, // q nondecreasing along an edge failed
    EdgeLipschitz,    // edge increment exceeded b_l - a_l
};

/// A failed constraint: the vertex (or lower edge endpoint), the edge
/// coordinate (0 for vertex bounds), and both sides of the inequality
/// lhs <= rhs that was violated.
struct Violation {
    ViolationKind kind;
    MultiIndex index;
    int coord;
    Rational lhs;
    Rational rhs;
};

std::string describe(const Violation& violation);

/// Checks every vertex bound and every edge constraint, reporting all
/// violations instead of stopping at the first.
std::vector<Violation> validate(const GridQuasiCopula& grid);

/// Grid of a symmetric solution: the box is [a, b]^d and the value at a
/// vertex depends only on how many coordinates sit at the upper endpoint.
GridQuasiCopula symmetric_grid(const ClosedFormSolution& sol);

/// JSON form: {"d": ..., "a": [...], "b": [...], "q": {bitstring: rational}}
/// with canonical rational text and coordinate-first bitstrings.
std::string to_json_string(const GridQuasiCopula& grid);
GridQuasiCopula grid_from_json_string(std::string_view text);

} // namespace qcvol

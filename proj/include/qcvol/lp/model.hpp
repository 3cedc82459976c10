#pragma once

#include "qcvol/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcvol::lp {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEq, Equal, GreaterEq };
enum class VarBound { NonNegative, Free };
enum class SolveStatus { Optimal, Infeasible, Unbounded };

std::string_view to_string(Sense sense);
std::string_view to_string(Relation rel);
std::string_view to_string(SolveStatus status);

struct Constraint {
    std::string name;
    std::vector<Rational> coeffs; // one entry per variable
    Relation rel = Relation::LessEq;
    Rational rhs;
};

/// A linear program over rational data. Variables are bounded below by zero
/// unless declared Free; rows are arbitrary linear relations.
struct LpModel {
    std::string name;
    Sense sense = Sense::Minimize;
    std::vector<std::string> var_names;
    std::vector<VarBound> var_bounds;
    std::vector<Rational> objective;
    std::vector<Constraint> rows;

    int add_var(std::string var_name, VarBound bound = VarBound::NonNegative);
    void add_row(std::string row_name, std::vector<Rational> coeffs, Relation rel, Rational rhs);
    int num_vars() const { return static_cast<int>(var_names.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }
    /// Index of a variable, -1 if absent.
    int var_index(std::string_view var_name) const;

    /// Throws std::invalid_argument on duplicate names or size mismatches.
    void check_well_formed() const;
};

struct LpSolution {
    SolveStatus status = SolveStatus::Infeasible;
    Rational objective_value;
    /// Variable values in model order.
    std::vector<std::pair<std::string, Rational>> primal;
    /// Names of the basic variables, one per row (slacks included).
    std::vector<std::string> basis;
    long pivot_count = 0;

    const Rational& value(std::string_view var_name) const;
};

/// Deterministic human-readable dump, one row per line, terms in variable
/// order with zero coefficients omitted.
std::string to_text(const LpModel& model);

/// Same shape and data up to renaming: sense, bounds, objective, and rows
/// (relation, rhs, coefficients) all agree position-wise.
bool structurally_equal(const LpModel& a, const LpModel& b);

/// Exact feasibility of a named point (values looked up per model variable).
bool satisfies(const LpModel& model, const LpSolution& point);

/// Exact objective value of a named point.
Rational objective_value_at(const LpModel& model, const LpSolution& point);

} // namespace qcvol::lp

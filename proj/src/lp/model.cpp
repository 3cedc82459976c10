#include "qcvol/lp/model.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace qcvol::lp {

std::string_view to_string(Sense sense) {
    return sense == Sense::Minimize ? "minimize" : "maximize";
}

std::string_view to_string(Relation rel) {
    switch (rel) {
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEq: return ">=";
    }
    return "?";
}

std::string_view to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    }
    return "?";
}

int LpModel::add_var(std::string var_name, VarBound bound) {
    var_names.push_back(std::move(var_name));
    var_bounds.push_back(bound);
    objective.push_back(Rational(0));
    return num_vars() - 1;
}

void LpModel::add_row(std::string row_name, std::vector<Rational> coeffs, Relation rel,
                      Rational rhs) {
    if (coeffs.size() != var_names.size())
        throw std::invalid_argument("row \"" + row_name + "\" has " +
                                    std::to_string(coeffs.size()) + " coefficients for " +
                                    std::to_string(var_names.size()) + " variables");
    rows.push_back({std::move(row_name), std::move(coeffs), rel, std::move(rhs)});
}

int LpModel::var_index(std::string_view var_name) const {
    for (int i = 0; i < num_vars(); ++i)
        if (var_names[i] == var_name)
            return i;
    return -1;
}

void LpModel::check_well_formed() const {
    std::unordered_set<std::string> seen;
    for (const auto& n : var_names) {
        if (n.empty())
            throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name \"" + n + "\"");
    }
    if (var_bounds.size() != var_names.size() || objective.size() != var_names.size())
        throw std::invalid_argument("variable metadata sizes disagree");
    for (const auto& row : rows)
        if (row.coeffs.size() != var_names.size())
            throw std::invalid_argument("row \"" + row.name + "\" coefficient count mismatch");
}

const Rational& LpSolution::value(std::string_view var_name) const {
    for (const auto& [name, val] : primal)
        if (name == var_name)
            return val;
    throw std::invalid_argument("no value for variable \"" + std::string(var_name) + "\"");
}

namespace {

void append_linear(std::ostringstream& os, const std::vector<Rational>& coeffs,
                   const std::vector<std::string>& names) {
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        const Rational mag = abs(coeffs[i]);
        if (first) {
            if (coeffs[i].sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (coeffs[i].sign() < 0 ? " - " : " + ");
        }
        if (mag != Rational(1))
            os << to_string(mag) << "*";
        os << names[i];
    }
    if (first)
        os << "0";
}

} // namespace

std::string to_text(const LpModel& model) {
    std::ostringstream os;
    os << "model: " << model.name << "\n";
    os << to_string(model.sense) << ": ";
    append_linear(os, model.objective, model.var_names);
    os << "\nsubject to:\n";
    for (const auto& row : model.rows) {
        os << "  " << row.name << ": ";
        append_linear(os, row.coeffs, model.var_names);
        os << " " << to_string(row.rel) << " " << to_string(row.rhs) << "\n";
    }
    os << "variables:\n";
    for (int i = 0; i < model.num_vars(); ++i)
        os << "  " << model.var_names[i]
           << (model.var_bounds[i] == VarBound::NonNegative ? " >= 0" : " free") << "\n";
    return os.str();
}

bool satisfies(const LpModel& model, const LpSolution& point) {
    std::vector<Rational> x;
    x.reserve(model.num_vars());
    for (int v = 0; v < model.num_vars(); ++v) {
        const Rational& val = point.value(model.var_names[v]);
        if (model.var_bounds[v] == VarBound::NonNegative && val.sign() < 0)
            return false;
        x.push_back(val);
    }
    for (const auto& row : model.rows) {
        Rational lhs(0);
        for (int v = 0; v < model.num_vars(); ++v)
            lhs += row.coeffs[v] * x[v];
        switch (row.rel) {
        case Relation::LessEq:
            if (lhs > row.rhs)
                return false;
            break;
        case Relation::Equal:
            if (lhs != row.rhs)
                return false;
            break;
        case Relation::GreaterEq:
            if (lhs < row.rhs)
                return false;
            break;
        }
    }
    return true;
}

Rational objective_value_at(const LpModel& model, const LpSolution& point) {
    Rational total(0);
    for (int v = 0; v < model.num_vars(); ++v)
        total += model.objective[v] * point.value(model.var_names[v]);
    return total;
}

bool structurally_equal(const LpModel& a, const LpModel& b) {
    if (a.sense != b.sense || a.num_vars() != b.num_vars() || a.num_rows() != b.num_rows())
        return false;
    if (a.var_bounds != b.var_bounds)
        return false;
    for (int i = 0; i < a.num_vars(); ++i)
        if (a.objective[i] != b.objective[i])
            return false;
    for (int r = 0; r < a.num_rows(); ++r) {
        const auto& x = a.rows[r];
        const auto& y = b.rows[r];
        if (x.rel != y.rel || x.rhs != y.rhs)
            return false;
        for (int i = 0; i < a.num_vars(); ++i)
            if (x.coeffs[i] != y.coeffs[i])
                return false;
    }
    return true;
}

} // namespace qcvol::lp

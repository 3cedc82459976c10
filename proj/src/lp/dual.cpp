#include "qcvol/lp/dual.hpp"

#include <stdexcept>

namespace qcvol::lp {

bool is_standard_form(const LpModel& model) {
    if (model.sense != Sense::Maximize)
        return false;
    for (const auto& bound : model.var_bounds)
        if (bound != VarBound::NonNegative)
            return false;
    for (const auto& row : model.rows)
        if (row.rel != Relation::LessEq)
            return false;
    return true;
}

LpModel standardize(const LpModel& model) {
    model.check_well_formed();
    LpModel out;
    out.name = model.name;
    out.sense = Sense::Maximize;

    std::vector<int> plus_col(model.num_vars()), minus_col(model.num_vars(), -1);
    for (int v = 0; v < model.num_vars(); ++v) {
        if (model.var_bounds[v] == VarBound::NonNegative) {
            plus_col[v] = out.add_var(model.var_names[v]);
        } else {
            plus_col[v] = out.add_var(model.var_names[v] + "+");
            minus_col[v] = out.add_var(model.var_names[v] + "-");
        }
    }
    auto expand = [&](const std::vector<Rational>& coeffs, bool negate) {
        std::vector<Rational> full(out.num_vars(), Rational(0));
        for (int v = 0; v < model.num_vars(); ++v) {
            const Rational c = negate ? -coeffs[v] : coeffs[v];
            full[plus_col[v]] = c;
            if (minus_col[v] >= 0)
                full[minus_col[v]] = -c;
        }
        return full;
    };
    out.objective = expand(model.objective, model.sense == Sense::Minimize);
    for (const auto& row : model.rows) {
        switch (row.rel) {
        case Relation::LessEq:
            out.add_row(row.name, expand(row.coeffs, false), Relation::LessEq, row.rhs);
            break;
        case Relation::GreaterEq:
            out.add_row(row.name, expand(row.coeffs, true), Relation::LessEq, -row.rhs);
            break;
        case Relation::Equal:
            out.add_row(row.name, expand(row.coeffs, false), Relation::LessEq, row.rhs);
            out.add_row(row.name + "~", expand(row.coeffs, true), Relation::LessEq, -row.rhs);
            break;
        }
    }
    return out;
}

LpModel dualize(const LpModel& model) {
    model.check_well_formed();
    if (!is_standard_form(model))
        throw std::invalid_argument("dualize needs inequality standard form; standardize first");
    LpModel dual;
    dual.name = "dual(" + model.name + ")";
    dual.sense = Sense::Minimize;
    for (const auto& row : model.rows)
        dual.add_var(row.name);
    for (int r = 0; r < model.num_rows(); ++r)
        dual.objective[r] = model.rows[r].rhs;
    for (int v = 0; v < model.num_vars(); ++v) {
        std::vector<Rational> column(model.num_rows());
        for (int r = 0; r < model.num_rows(); ++r)
            column[r] = model.rows[r].coeffs[v];
        dual.add_row(model.var_names[v], std::move(column), Relation::GreaterEq,
                     model.objective[v]);
    }
    return dual;
}

bool check_complementary_slackness(const LpModel& primal, const LpSolution& primal_sol,
                                   const LpSolution& dual_sol) {
    primal.check_well_formed();
    if (primal_sol.status != SolveStatus::Optimal || dual_sol.status != SolveStatus::Optimal)
        throw std::invalid_argument("complementary slackness needs an optimal solution pair");
    for (const auto& row : primal.rows)
        if (row.rel != Relation::LessEq)
            throw std::invalid_argument("complementary slackness expects a primal with <= rows");
    for (const auto& bound : primal.var_bounds)
        if (bound != VarBound::NonNegative)
            throw std::invalid_argument(
                "complementary slackness expects nonnegative primal variables");
    if (dual_sol.primal.size() != primal.rows.size())
        throw std::invalid_argument("dual solution has " + std::to_string(dual_sol.primal.size()) +
                                    " values for " + std::to_string(primal.rows.size()) +
                                    " primal rows");

    std::vector<Rational> x;
    x.reserve(primal.num_vars());
    for (const auto& name : primal.var_names)
        x.push_back(primal_sol.value(name));
    std::vector<Rational> y;
    y.reserve(dual_sol.primal.size());
    for (const auto& [name, val] : dual_sol.primal)
        y.push_back(val);

    // In the max convention both optima are b'y and c'x; a gap means the
    // pair does not belong together.
    const bool maximizing = primal.sense == Sense::Maximize;
    Rational primal_obj(0);
    for (int v = 0; v < primal.num_vars(); ++v)
        primal_obj += primal.objective[v] * x[v];
    if (!maximizing)
        primal_obj = -primal_obj;
    Rational dual_obj(0);
    for (int r = 0; r < primal.num_rows(); ++r)
        dual_obj += primal.rows[r].rhs * y[r];
    if (primal_obj != dual_obj)
        throw std::invalid_argument("objective values disagree (" + to_string(primal_obj) +
                                    " vs " + to_string(dual_obj) + "); not an optimal pair");

    // Nonzero dual value -> tight primal row.
    for (int r = 0; r < primal.num_rows(); ++r) {
        if (y[r].is_zero())
            continue;
        Rational lhs(0);
        for (int v = 0; v < primal.num_vars(); ++v)
            lhs += primal.rows[r].coeffs[v] * x[v];
        if (lhs != primal.rows[r].rhs)
            return false;
    }
    // Nonzero primal variable -> tight dual row A'y = c.
    for (int v = 0; v < primal.num_vars(); ++v) {
        if (x[v].is_zero())
            continue;
        Rational lhs(0);
        for (int r = 0; r < primal.num_rows(); ++r)
            lhs += primal.rows[r].coeffs[v] * y[r];
        Rational c = primal.objective[v];
        if (!maximizing)
            c = -c;
        if (lhs != c)
            return false;
    }
    return true;
}

} // namespace qcvol::lp

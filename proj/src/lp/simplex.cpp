#include "qcvol/lp/simplex.hpp"

#include <stdexcept>
#include <vector>

namespace qcvol::lp {

namespace {

enum class ColKind { Structural, Slack, Surplus, Artificial };

struct Column {
    ColKind kind;
    int var = -1;  // model variable for structural columns
    int sign = 1;  // contribution sign (free variables split into +/-)
    int row = -1;  // owning row for slack/surplus/artificial columns
};

struct Tableau {
    std::vector<std::vector<mpq_class>> rows; // each ncols entries + rhs
    std::vector<mpq_class> z1, z2;            // phase cost rows, same layout
    std::vector<int> basis;                   // basic column per row
    std::vector<Column> cols;
    int ncols = 0;

    mpq_class& rhs(int r) { return rows[r][ncols]; }

    void pivot(int pr, int pc) {
        auto& prow = rows[pr];
        if (prow[pc] != 1) {
            const mpq_class inv = 1 / prow[pc];
            for (int j = 0; j <= ncols; ++j)
                if (prow[j] != 0)
                    prow[j] *= inv;
        }
        std::vector<int> nz;
        for (int j = 0; j <= ncols; ++j)
            if (prow[j] != 0)
                nz.push_back(j);
        auto eliminate = [&](std::vector<mpq_class>& target) {
            if (target[pc] == 0)
                return;
            const mpq_class f = target[pc];
            for (int j : nz)
                target[j] -= f * prow[j];
            target[pc] = 0;
        };
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (static_cast<int>(r) != pr)
                eliminate(rows[r]);
        eliminate(z1);
        eliminate(z2);
        basis[pr] = pc;
    }
};

} // namespace

LpSolution solve(const LpModel& model) {
    model.check_well_formed();

    Tableau t;
    const int nv = model.num_vars();
    const int m = model.num_rows();

    // Structural columns; free variables become a difference of two columns.
    std::vector<int> plus_col(nv), minus_col(nv, -1);
    for (int v = 0; v < nv; ++v) {
        plus_col[v] = static_cast<int>(t.cols.size());
        t.cols.push_back({ColKind::Structural, v, 1, -1});
        if (model.var_bounds[v] == VarBound::Free) {
            minus_col[v] = static_cast<int>(t.cols.size());
            t.cols.push_back({ColKind::Structural, v, -1, -1});
        }
    }
    const int n_structural = static_cast<int>(t.cols.size());

    // Orient rows so the right-hand side is nonnegative.
    std::vector<Relation> rel(m);
    std::vector<mpq_class> rhs(m);
    std::vector<std::vector<mpq_class>> coeff(m, std::vector<mpq_class>(n_structural, 0));
    for (int r = 0; r < m; ++r) {
        const auto& row = model.rows[r];
        const bool flip = row.rhs.sign() < 0;
        rel[r] = row.rel;
        if (flip) {
            rhs[r] = mpq_class(-row.rhs.raw());
            if (row.rel == Relation::LessEq)
                rel[r] = Relation::GreaterEq;
            else if (row.rel == Relation::GreaterEq)
                rel[r] = Relation::LessEq;
        } else {
            rhs[r] = row.rhs.raw();
        }
        for (int v = 0; v < nv; ++v) {
            mpq_class a = row.coeffs[v].raw();
            if (flip)
                a = -a;
            coeff[r][plus_col[v]] = a;
            if (minus_col[v] >= 0)
                coeff[r][minus_col[v]] = -a;
        }
    }

    // Slack / surplus / artificial columns and the initial basis.
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    for (int r = 0; r < m; ++r) {
        if (rel[r] == Relation::LessEq) {
            slack_col[r] = static_cast<int>(t.cols.size());
            t.cols.push_back({ColKind::Slack, -1, 1, r});
        } else if (rel[r] == Relation::GreaterEq) {
            slack_col[r] = static_cast<int>(t.cols.size());
            t.cols.push_back({ColKind::Surplus, -1, 1, r});
        }
    }
    for (int r = 0; r < m; ++r) {
        if (rel[r] != Relation::LessEq) {
            art_col[r] = static_cast<int>(t.cols.size());
            t.cols.push_back({ColKind::Artificial, -1, 1, r});
        }
    }
    t.ncols = static_cast<int>(t.cols.size());

    t.rows.assign(m, std::vector<mpq_class>(t.ncols + 1, 0));
    t.basis.assign(m, -1);
    bool need_phase1 = false;
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < n_structural; ++j)
            t.rows[r][j] = coeff[r][j];
        t.rows[r][t.ncols] = rhs[r];
        if (rel[r] == Relation::LessEq) {
            t.rows[r][slack_col[r]] = 1;
            t.basis[r] = slack_col[r];
        } else {
            if (rel[r] == Relation::GreaterEq)
                t.rows[r][slack_col[r]] = -1;
            t.rows[r][art_col[r]] = 1;
            t.basis[r] = art_col[r];
            need_phase1 = true;
        }
    }

    // Cost rows hold z_j - c_j; we always maximize internally.
    t.z1.assign(t.ncols + 1, 0);
    t.z2.assign(t.ncols + 1, 0);
    for (int v = 0; v < nv; ++v) {
        mpq_class c = model.objective[v].raw();
        if (model.sense == Sense::Minimize)
            c = -c;
        t.z2[plus_col[v]] -= c;
        if (minus_col[v] >= 0)
            t.z2[minus_col[v]] += c;
    }
    if (need_phase1) {
        // Phase 1 maximizes minus the artificial sum; price out the
        // artificial part of the initial basis.
        for (int j = 0; j < t.ncols; ++j)
            if (t.cols[j].kind == ColKind::Artificial)
                t.z1[j] = 1;
        for (int r = 0; r < m; ++r)
            if (t.cols[t.basis[r]].kind == ColKind::Artificial)
                for (int j = 0; j <= t.ncols; ++j)
                    if (t.rows[r][j] != 0)
                        t.z1[j] -= t.rows[r][j];
    }

    const long pivot_limit = 10L * (m + t.ncols) * (m + t.ncols);
    long pivots = 0;

    auto run_phase = [&](std::vector<mpq_class>& z, bool allow_artificial) -> bool {
        for (;;) {
            // Bland: entering column is the lowest-index improving one.
            int pc = -1;
            for (int j = 0; j < t.ncols; ++j) {
                if (!allow_artificial && t.cols[j].kind == ColKind::Artificial)
                    continue;
                if (z[j] < 0) {
                    pc = j;
                    break;
                }
            }
            if (pc < 0)
                return true; // optimal for this phase
            // Ratio test; ties resolved by the smallest basic column index.
            int pr = -1;
            mpq_class best;
            for (int r = 0; r < m; ++r) {
                if (t.rows[r][pc] <= 0)
                    continue;
                mpq_class ratio = t.rhs(r) / t.rows[r][pc];
                if (pr < 0 || ratio < best || (ratio == best && t.basis[r] < t.basis[pr])) {
                    pr = r;
                    best = ratio;
                }
            }
            if (pr < 0)
                return false; // unbounded direction
            t.pivot(pr, pc);
            if (++pivots > pivot_limit)
                throw std::runtime_error("simplex exceeded its pivot budget on model \"" +
                                         model.name + "\"");
        }
    };

    LpSolution sol;
    if (need_phase1) {
        if (!run_phase(t.z1, true))
            throw std::logic_error("phase-1 objective cannot be unbounded");
        if (t.z1[t.ncols] != 0) {
            // Maximum of -(artificial sum) is negative: no feasible point.
            sol.status = SolveStatus::Infeasible;
            sol.pivot_count = pivots;
            return sol;
        }
        // Remove artificial variables from the basis where possible.
        for (int r = 0; r < m; ++r) {
            if (t.cols[t.basis[r]].kind != ColKind::Artificial)
                continue;
            for (int j = 0; j < t.ncols; ++j) {
                if (t.cols[j].kind == ColKind::Artificial)
                    continue;
                if (t.rows[r][j] != 0) {
                    t.pivot(r, j);
                    ++pivots;
                    break;
                }
            }
            // A row that stays artificial-basic is redundant and inert.
        }
    }

    if (!run_phase(t.z2, false)) {
        sol.status = SolveStatus::Unbounded;
        sol.pivot_count = pivots;
        return sol;
    }

    std::vector<mpq_class> col_value(t.ncols, 0);
    for (int r = 0; r < m; ++r)
        col_value[t.basis[r]] = t.rhs(r);
    std::vector<Rational> x(nv);
    for (int v = 0; v < nv; ++v) {
        mpq_class val = col_value[plus_col[v]];
        if (minus_col[v] >= 0)
            val -= col_value[minus_col[v]];
        x[v] = Rational::from_raw(val);
    }

    sol.status = SolveStatus::Optimal;
    Rational obj(0);
    for (int v = 0; v < nv; ++v)
        obj += model.objective[v] * x[v];
    sol.objective_value = obj;
    for (int v = 0; v < nv; ++v)
        sol.primal.emplace_back(model.var_names[v], x[v]);
    auto col_name = [&](int j) -> std::string {
        const Column& c = t.cols[j];
        switch (c.kind) {
        case ColKind::Structural:
            return model.var_names[c.var] + (c.sign < 0 ? "-" : "");
        case ColKind::Slack:
            return "slack(" + model.rows[c.row].name + ")";
        case ColKind::Surplus:
            return "surplus(" + model.rows[c.row].name + ")";
        case ColKind::Artificial:
            return "artificial(" + model.rows[c.row].name + ")";
        }
        return "?";
    };
    for (int r = 0; r < m; ++r)
        sol.basis.push_back(col_name(t.basis[r]));
    sol.pivot_count = pivots;
    return sol;
}

} // namespace qcvol::lp

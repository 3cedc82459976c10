#include "qcvol/lp_builders.hpp"

#include "qcvol/grid.hpp"

#include <stdexcept>

namespace qcvol {

using lp::LpModel;
using lp::LpSolution;
using lp::Relation;
using lp::Sense;

std::string to_string(const LpFamily& family) {
    switch (family.kind) {
    case LpFamily::Kind::FullLp: return "FullLp";
    case LpFamily::Kind::SymmetricLp: return "SymmetricLp";
    case LpFamily::Kind::ReducedLp: return "ReducedLp";
    case LpFamily::Kind::DualReduced: return "DualReduced";
    case LpFamily::Kind::SimplifiedDualBranch:
        return family.l_d_zero ? "SimplifiedDualBranch(l_d=0)" : "SimplifiedDualBranch(l_d tied)";
    case LpFamily::Kind::FinalDual: return "FinalDual";
    }
    return "?";
}

namespace {

std::string tag(const std::string& family, int d, VolumeSign sign) {
    return family + " d=" + std::to_string(d) + " " + std::string(to_string(sign));
}

// Signed objective coefficient of step j: (-1)^(d+j) * binom(d-1, j-1).
Rational step_coefficient(int d, int j) {
    const Rational mag(binomial(d - 1, j - 1));
    return (d + j) % 2 == 0 ? mag : -mag;
}

// Right-hand side of the dual row for step j: the step coefficient, negated
// for the negative sign (whose objective is minimized).
Rational dual_step_bound(int d, int j, VolumeSign sign) {
    const Rational c = step_coefficient(d, j);
    return sign == VolumeSign::Negative ? -c : c;
}

LpModel build_full(int d, VolumeSign sign) {
    if (d > 6)
        throw std::domain_error("FullLp has 2^d value variables and is limited to d <= 6; got d = " +
                                std::to_string(d));
    LpModel m;
    m.name = tag("FullLp", d, sign);
    m.sense = sign == VolumeSign::Negative ? Sense::Minimize : Sense::Maximize;
    std::vector<int> a(d), b(d);
    for (int i = 0; i < d; ++i)
        a[i] = m.add_var("a_" + std::to_string(i + 1));
    for (int i = 0; i < d; ++i)
        b[i] = m.add_var("b_" + std::to_string(i + 1));
    const unsigned nverts = 1u << d;
    std::vector<int> q(nverts);
    for (unsigned bits = 0; bits < nverts; ++bits) {
        const MultiIndex index(d, bits);
        q[bits] = m.add_var("q_" + index.bitstring());
        m.objective[q[bits]] = Rational(index.sign());
    }
    const int nv = m.num_vars();
    auto zero_row = [&] { return std::vector<Rational>(nv, Rational(0)); };

    for (int i = 0; i < d; ++i) {
        auto row = zero_row();
        row[b[i]] = 1;
        m.add_row("cap_b_" + std::to_string(i + 1), std::move(row), Relation::LessEq, Rational(1));
    }
    for (int i = 0; i < d; ++i) {
        auto row = zero_row();
        row[a[i]] = 1;
        row[b[i]] = -1;
        m.add_row("order_" + std::to_string(i + 1), std::move(row), Relation::LessEq, Rational(0));
    }
    for (unsigned bits = 0; bits < nverts; ++bits) {
        const MultiIndex index(d, bits);
        for (int coord = 1; coord <= d; ++coord) {
            if (index.is_upper(coord))
                continue;
            const unsigned other = index.raised(coord).bits();
            const std::string suffix = index.bitstring() + "_" + std::to_string(coord);
            auto mono = zero_row();
            mono[q[bits]] = 1;
            mono[q[other]] = -1;
            m.add_row("mono_" + suffix, std::move(mono), Relation::LessEq, Rational(0));
            auto lip = zero_row();
            lip[q[other]] = 1;
            lip[q[bits]] = -1;
            lip[b[coord - 1]] = -1;
            lip[a[coord - 1]] = 1;
            m.add_row("lip_" + suffix, std::move(lip), Relation::LessEq, Rational(0));
        }
    }
    for (unsigned bits = 0; bits < nverts; ++bits) {
        const MultiIndex index(d, bits);
        auto glb = zero_row();
        for (int coord = 1; coord <= d; ++coord)
            glb[index.is_upper(coord) ? b[coord - 1] : a[coord - 1]] += 1;
        glb[q[bits]] = -1;
        m.add_row("glb_" + index.bitstring(), std::move(glb), Relation::LessEq, Rational(d - 1));
    }
    for (unsigned bits = 0; bits < nverts; ++bits) {
        const MultiIndex index(d, bits);
        for (int coord = 1; coord <= d; ++coord) {
            auto hub = zero_row();
            hub[q[bits]] = 1;
            hub[index.is_upper(coord) ? b[coord - 1] : a[coord - 1]] -= 1;
            m.add_row("hub_" + index.bitstring() + "_" + std::to_string(coord), std::move(hub),
                      Relation::LessEq, Rational(0));
        }
    }
    return m;
}

LpModel build_symmetric(int d, VolumeSign sign) {
    LpModel m;
    m.name = tag("SymmetricLp", d, sign);
    m.sense = sign == VolumeSign::Negative ? Sense::Minimize : Sense::Maximize;
    const int a = m.add_var("a");
    const int b = m.add_var("b");
    std::vector<int> q(d + 1);
    for (int i = 0; i <= d; ++i) {
        q[i] = m.add_var("q" + std::to_string(i));
        const Rational mag(binomial(d, i));
        m.objective[q[i]] = (d - i) % 2 == 0 ? mag : -mag;
    }
    const int nv = m.num_vars();
    auto zero_row = [&] { return std::vector<Rational>(nv, Rational(0)); };

    {
        auto row = zero_row();
        row[b] = 1;
        m.add_row("cap_b", std::move(row), Relation::LessEq, Rational(1));
    }
    {
        auto row = zero_row();
        row[a] = 1;
        row[b] = -1;
        m.add_row("order", std::move(row), Relation::LessEq, Rational(0));
    }
    for (int i = 1; i <= d; ++i) {
        auto mono = zero_row();
        mono[q[i - 1]] = 1;
        mono[q[i]] = -1;
        m.add_row("mono_" + std::to_string(i), std::move(mono), Relation::LessEq, Rational(0));
        auto lip = zero_row();
        lip[q[i]] = 1;
        lip[q[i - 1]] = -1;
        lip[b] = -1;
        lip[a] = 1;
        m.add_row("lip_" + std::to_string(i), std::move(lip), Relation::LessEq, Rational(0));
    }
    for (int i = 0; i <= d; ++i) {
        auto glb = zero_row();
        glb[a] = Rational(d - i);
        glb[b] = Rational(i);
        glb[q[i]] = -1;
        m.add_row("glb_" + std::to_string(i), std::move(glb), Relation::LessEq, Rational(d - 1));
        auto hub = zero_row();
        hub[q[i]] = 1;
        hub[i < d ? a : b] -= 1;
        m.add_row("hub_" + std::to_string(i), std::move(hub), Relation::LessEq, Rational(0));
    }
    return m;
}

LpModel build_reduced(int d, VolumeSign sign) {
    LpModel m;
    m.name = tag("ReducedLp", d, sign);
    m.sense = sign == VolumeSign::Negative ? Sense::Minimize : Sense::Maximize;
    const int a = m.add_var("a");
    const int b = m.add_var("b");
    const int q0 = m.add_var("q0");
    std::vector<int> delta(d + 1);
    for (int j = 1; j <= d; ++j) {
        delta[j] = m.add_var("delta_" + std::to_string(j));
        m.objective[delta[j]] = step_coefficient(d, j);
    }
    const int nv = m.num_vars();
    auto zero_row = [&] { return std::vector<Rational>(nv, Rational(0)); };

    {
        auto row = zero_row();
        row[b] = 1;
        m.add_row("cap_b", std::move(row), Relation::LessEq, Rational(1));
    }
    for (int j = 1; j <= d; ++j) {
        auto row = zero_row();
        row[delta[j]] = 1;
        row[b] = -1;
        row[a] = 1;
        m.add_row("step_" + std::to_string(j), std::move(row), Relation::LessEq, Rational(0));
    }
    {
        auto row = zero_row();
        row[q0] = 1;
        for (int j = 1; j <= d - 1; ++j)
            row[delta[j]] = 1;
        row[a] = -1;
        m.add_row("level_cap", std::move(row), Relation::LessEq, Rational(0));
    }
    {
        auto row = zero_row();
        row[b] = Rational(d);
        row[q0] = -1;
        for (int j = 1; j <= d; ++j)
            row[delta[j]] = -1;
        m.add_row("mass_floor", std::move(row), Relation::LessEq, Rational(d - 1));
    }
    return m;
}

LpModel build_dual_reduced(int d, VolumeSign sign) {
    LpModel m;
    m.name = tag("DualReduced", d, sign);
    m.sense = Sense::Minimize;
    const int y1 = m.add_var("y1");
    std::vector<int> l(d + 1);
    for (int j = 1; j <= d; ++j)
        l[j] = m.add_var("l" + std::to_string(j));
    const int y2 = m.add_var("y2");
    const int y3 = m.add_var("y3");
    m.objective[y1] = 1;
    m.objective[y3] = Rational(d - 1);
    const int nv = m.num_vars();
    auto zero_row = [&] { return std::vector<Rational>(nv, Rational(0)); };

    {
        auto row = zero_row();
        for (int j = 1; j <= d; ++j)
            row[l[j]] = 1;
        row[y2] = -1;
        m.add_row("a", std::move(row), Relation::GreaterEq, Rational(0));
    }
    {
        auto row = zero_row();
        row[y1] = 1;
        for (int j = 1; j <= d; ++j)
            row[l[j]] = -1;
        row[y3] = Rational(d);
        m.add_row("b", std::move(row), Relation::GreaterEq, Rational(0));
    }
    {
        auto row = zero_row();
        row[y2] = 1;
        row[y3] = -1;
        m.add_row("q0", std::move(row), Relation::GreaterEq, Rational(0));
    }
    for (int j = 1; j <= d - 1; ++j) {
        auto row = zero_row();
        row[l[j]] = 1;
        row[y2] = 1;
        row[y3] = -1;
        m.add_row("delta_" + std::to_string(j), std::move(row), Relation::GreaterEq,
                  dual_step_bound(d, j, sign));
    }
    {
        auto row = zero_row();
        row[l[d]] = 1;
        row[y3] = -1;
        m.add_row("delta_" + std::to_string(d), std::move(row), Relation::GreaterEq,
                  dual_step_bound(d, d, sign));
    }
    return m;
}

LpModel build_simplified_branch(int d, VolumeSign sign, bool l_d_zero) {
    if (l_d_zero && sign == VolumeSign::Positive)
        throw std::domain_error(
            "the l_d = 0 branch is empty for the positive sign (l_d = 1 + y3 > 0 always)");
    LpModel m;
    m.name = tag(l_d_zero ? "SimplifiedDualBranch(l_d=0)" : "SimplifiedDualBranch(l_d tied)", d,
                 sign);
    m.sense = Sense::Minimize;
    std::vector<int> l(d + 1);
    for (int j = 1; j <= d; ++j)
        l[j] = m.add_var("l" + std::to_string(j));
    const int y3 = m.add_var("y3");
    m.objective[y3] = Rational(d - 1);
    const int nv = m.num_vars();
    auto zero_row = [&] { return std::vector<Rational>(nv, Rational(0)); };

    {
        auto row = zero_row();
        for (int j = 1; j <= d; ++j)
            row[l[j]] = -1;
        row[y3] = Rational(d);
        m.add_row("mass", std::move(row), Relation::Equal, Rational(0));
    }
    for (int j = 1; j <= d - 1; ++j) {
        auto row = zero_row();
        row[l[j]] = 1;
        row[y3] = Rational(d - 1);
        m.add_row("delta_" + std::to_string(j), std::move(row), Relation::GreaterEq,
                  dual_step_bound(d, j, sign));
    }
    if (l_d_zero) {
        auto row = zero_row();
        row[l[d]] = 1;
        m.add_row("top_step_zero", std::move(row), Relation::Equal, Rational(0));
        auto cap = zero_row();
        cap[y3] = 1;
        m.add_row("y3_cap", std::move(cap), Relation::LessEq, Rational(1));
    } else {
        auto row = zero_row();
        row[l[d]] = 1;
        row[y3] = -1;
        m.add_row("top_step_tied", std::move(row), Relation::Equal,
                  sign == VolumeSign::Negative ? Rational(-1) : Rational(1));
    }
    return m;
}

LpModel build_final_dual(int d, VolumeSign sign) {
    LpModel m;
    m.name = tag("FinalDual", d, sign);
    m.sense = Sense::Minimize;
    std::vector<int> l(d);
    for (int j = 1; j <= d - 1; ++j)
        l[j] = m.add_var("l" + std::to_string(j));
    const int w = m.add_var("w");
    m.objective[w] = 1;
    const int nv = m.num_vars();
    auto zero_row = [&] { return std::vector<Rational>(nv, Rational(0)); };

    {
        auto row = zero_row();
        for (int j = 1; j <= d - 1; ++j)
            row[l[j]] = -1;
        row[w] = 1;
        m.add_row("mass", std::move(row), Relation::Equal,
                  sign == VolumeSign::Negative ? Rational(-1) : Rational(1));
    }
    for (int j = 1; j <= d - 1; ++j) {
        auto row = zero_row();
        row[l[j]] = 1;
        row[w] = 1;
        m.add_row("delta_" + std::to_string(j), std::move(row), Relation::GreaterEq,
                  dual_step_bound(d, j, sign));
    }
    return m;
}

} // namespace

LpModel build(LpFamily family, int d, VolumeSign sign) {
    if (d < 2)
        throw std::domain_error("volume programs are built for d >= 2; got d = " +
                                std::to_string(d));
    switch (family.kind) {
    case LpFamily::Kind::FullLp: return build_full(d, sign);
    case LpFamily::Kind::SymmetricLp: return build_symmetric(d, sign);
    case LpFamily::Kind::ReducedLp: return build_reduced(d, sign);
    case LpFamily::Kind::DualReduced: return build_dual_reduced(d, sign);
    case LpFamily::Kind::SimplifiedDualBranch:
        return build_simplified_branch(d, sign, family.l_d_zero);
    case LpFamily::Kind::FinalDual: return build_final_dual(d, sign);
    }
    throw std::domain_error("unknown family");
}

LpModel build_auxiliary_lp(const AuxiliaryInstance& inst) {
    const int k = static_cast<int>(inst.c.size());
    const int r = static_cast<int>(inst.e.size());
    LpModel m;
    m.name = "AuxiliaryLp k=" + std::to_string(k) + " r=" + std::to_string(r);
    m.sense = Sense::Minimize;
    const int w = m.add_var("w");
    m.objective[w] = 1;
    std::vector<int> y(k), z(r);
    for (int i = 0; i < k; ++i)
        y[i] = m.add_var("y" + std::to_string(i + 1));
    for (int i = 0; i < r; ++i)
        z[i] = m.add_var("z" + std::to_string(i + 1));
    const int nv = m.num_vars();
    auto zero_row = [&] { return std::vector<Rational>(nv, Rational(0)); };

    {
        auto row = zero_row();
        for (int i = 0; i < k; ++i)
            row[y[i]] = 1;
        for (int i = 0; i < r; ++i)
            row[z[i]] = 1;
        row[w] = -1;
        m.add_row("balance", std::move(row), Relation::Equal, inst.alpha);
    }
    for (int i = 0; i < k; ++i) {
        auto row = zero_row();
        row[y[i]] = 1;
        row[w] = 1;
        m.add_row("c" + std::to_string(i + 1), std::move(row), Relation::GreaterEq, inst.c[i]);
    }
    for (int i = 0; i < r; ++i) {
        auto row = zero_row();
        row[z[i]] = 1;
        row[w] = 1;
        m.add_row("e" + std::to_string(i + 1), std::move(row), Relation::GreaterEq, inst.e[i]);
    }
    return m;
}

LpSolution closed_form_dual_solution(int d, VolumeSign sign) {
    const ClosedFormSolution sol = extreme_volume(d, sign);
    if (sol.box_edge_b != Rational(1))
        throw std::domain_error(
            "no closed-form dual solution in the analytic range (negative, d <= 6)");
    const Rational w = sign == VolumeSign::Negative ? -sol.volume : sol.volume;
    const Rational y3 = w / Rational(d - 1);
    LpSolution out;
    out.status = lp::SolveStatus::Optimal;
    out.objective_value = w;
    out.primal.emplace_back("y1", Rational(0));
    for (int j = 1; j <= d - 1; ++j) {
        // Positive multiplier exactly on the rows whose step is pinned.
        const Rational lj = sol.delta[j - 1].is_zero()
                                ? Rational(0)
                                : Rational(binomial(d - 1, j - 1)) - w;
        out.primal.emplace_back("l" + std::to_string(j), lj);
    }
    const Rational ld =
        sign == VolumeSign::Negative ? Rational(-1) + y3 : Rational(1) + y3;
    out.primal.emplace_back("l" + std::to_string(d), ld);
    out.primal.emplace_back("y2", Rational(d) * y3);
    out.primal.emplace_back("y3", y3);
    return out;
}

RecoveredPrimal recover_primal_by_slackness(int d, VolumeSign sign,
                                            const LpSolution& dual_sol) {
    if (dual_sol.status != lp::SolveStatus::Optimal)
        throw std::invalid_argument("primal recovery needs an optimal dual solution");
    const Rational y1 = dual_sol.value("y1");
    const Rational y2 = dual_sol.value("y2");
    const Rational y3 = dual_sol.value("y3");
    std::vector<Rational> l(d + 1);
    for (int j = 1; j <= d; ++j)
        l[j] = dual_sol.value("l" + std::to_string(j));
    if (!(y2 > y3) || y3.sign() <= 0)
        throw std::invalid_argument("degenerate dual solution; recovery unsupported");

    // q0 = 0 since its dual row is slack. A step can be nonzero only where
    // its dual row is tight; on the tight rows we take the step at the box
    // width, which is the symmetric vertex of the optimal face.
    std::vector<bool> pinned(d + 1, false);
    int below_top = 0;
    bool top = false;
    for (int j = 1; j <= d; ++j) {
        const Rational row_value = (j < d) ? l[j] + y2 - y3 : l[d] - y3;
        if (row_value == dual_step_bound(d, j, sign)) {
            pinned[j] = true;
            if (j < d)
                ++below_top;
            else
                top = true;
        }
    }
    const int m1 = below_top;
    const int m_total = m1 + (top ? 1 : 0);
    // level_cap tight: a = m1 * (b - a); mass_floor tight:
    // d*b - d + 1 = m_total * (b - a).
    const Rational b = Rational((d - 1) * (m1 + 1), d * (m1 + 1) - m_total);
    const Rational a = Rational(m1) * b / Rational(m1 + 1);
    RecoveredPrimal rec;
    rec.a = a;
    rec.b = b;
    rec.q0 = Rational(0);
    const Rational width = b - a;
    for (int j = 1; j <= d; ++j)
        rec.delta.push_back(pinned[j] ? width : Rational(0));
    if (y1.sign() > 0 && b != Rational(1))
        throw std::invalid_argument("dual solution pins b = 1 but recovery disagrees");

    // The recovered point must be feasible for ReducedLp and close the gap.
    const LpModel primal = build(LpFamily::reduced(), d, sign);
    std::vector<Rational> x(primal.num_vars(), Rational(0));
    x[primal.var_index("a")] = a;
    x[primal.var_index("b")] = b;
    for (int j = 1; j <= d; ++j)
        x[primal.var_index("delta_" + std::to_string(j))] = rec.delta[j - 1];
    for (const auto& row : primal.rows) {
        Rational lhs(0);
        for (int v = 0; v < primal.num_vars(); ++v)
            lhs += row.coeffs[v] * x[v];
        if (lhs > row.rhs)
            throw std::runtime_error("recovered primal violates row \"" + row.name + "\"");
    }
    Rational obj(0);
    for (int v = 0; v < primal.num_vars(); ++v)
        obj += primal.objective[v] * x[v];
    const Rational expected = sign == VolumeSign::Negative ? -dual_sol.objective_value
                                                           : dual_sol.objective_value;
    if (obj != expected)
        throw std::runtime_error("recovered primal objective " + to_string(obj) +
                                 " does not match the dual optimum " + to_string(expected));
    return rec;
}

} // namespace qcvol

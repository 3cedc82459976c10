#include "qcvol/small_dims.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcvol {

namespace {

struct Threshold {
    int j;
    Rational value;
};

// Constraint bounds with positive right-hand side in the reduced dual for
// the negative case, ascending by value.
std::vector<Threshold> positive_thresholds(int d) {
    std::vector<Threshold> out;
    for (int j = 1; j <= d - 1; ++j) {
        if ((d + j) % 2 == 0)
            continue; // bound is negative for these j
        out.push_back({j, Rational(binomial(d - 1, j - 1))});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Threshold& x, const Threshold& y) { return x.value < y.value; });
    return out;
}

void check_range(int d) {
    if (d < 3 || d > 6)
        throw std::domain_error("analytic minimal-volume solver covers d = 3..6 only (got d = " +
                                std::to_string(d) + ")");
}

// The level values must satisfy the symmetric constraint system at (a, b).
void verify_solution(int d, const Rational& a, const Rational& b,
                     const std::vector<Rational>& q, const Rational& volume) {
    auto bad = [&](const char* what) {
        throw std::logic_error("analytic d=" + std::to_string(d) + " solution failed its " +
                               std::string(what) + " check");
    };
    if (!(Rational(0) <= a && a < b && b <= Rational(1)))
        bad("box");
    const Rational width = b - a;
    for (int i = 1; i <= d; ++i) {
        const Rational step = q[i] - q[i - 1];
        if (step < Rational(0) || step > width)
            bad("step");
    }
    Rational alternating(0);
    for (int i = 0; i <= d; ++i) {
        const Rational upper = (i < d) ? a : b;
        if (q[i] > upper)
            bad("upper bound");
        const Rational g = Rational(d - i) * a + Rational(i) * b - Rational(d - 1);
        if (q[i] < g || q[i] < Rational(0))
            bad("lower bound");
        const Rational term = Rational(binomial(d, i)) * q[i];
        alternating += ((d - i) % 2 == 0) ? term : -term;
    }
    if (alternating != volume)
        bad("objective");
}

} // namespace

std::vector<SmallDimCandidate> small_min_candidates(int d) {
    check_range(d);
    const auto th = positive_thresholds(d);
    const int k = static_cast<int>(th.size());
    std::vector<SmallDimCandidate> out;
    for (int i = 1; i <= k; ++i) {
        Rational sum(0);
        for (int t = k - i; t < k; ++t)
            sum += th[t].value;
        const Rational y3 = sum / Rational(i * (d - 1) + d);
        const Rational w = Rational(d - 1) * y3;
        bool feasible = y3 <= Rational(1);
        feasible = feasible && w <= th[k - i].value;            // tight rows keep l >= 0
        if (k - i >= 1)
            feasible = feasible && w >= th[k - i - 1].value;    // slack rows hold with l = 0
        out.push_back({i, y3, feasible});
    }
    return out;
}

SmallDimSolution solve_small_min(int d) {
    check_range(d);
    const auto candidates = small_min_candidates(d);
    const SmallDimCandidate* best = nullptr;
    for (const auto& cand : candidates) {
        if (!cand.feasible)
            continue;
        if (best == nullptr || cand.y3 < best->y3)
            best = &cand;
    }
    if (best == nullptr)
        throw std::logic_error("no feasible branch candidate for d = " + std::to_string(d));

    const Rational w = Rational(d - 1) * best->y3;
    const auto th = positive_thresholds(d);
    const int k = static_cast<int>(th.size());

    // Rows with a strictly positive multiplier pin their step to the box width.
    std::vector<int> pinned;
    for (int t = k - best->tight_count; t < k; ++t)
        if (th[t].value - w > Rational(0))
            pinned.push_back(th[t].j);
    const int m = static_cast<int>(pinned.size());

    SmallDimSolution sol;
    sol.d = d;
    sol.b = Rational((d - 1) * (m + 1), d * (m + 1) - m);
    sol.a = Rational(m) * sol.b / Rational(m + 1);
    const Rational width = sol.b - sol.a;
    std::vector<Rational> delta(d, Rational(0));
    for (int j : pinned)
        delta[j - 1] = width;
    sol.q_levels.assign(1, Rational(0));
    for (int j = 1; j <= d; ++j)
        sol.q_levels.push_back(sol.q_levels.back() + delta[j - 1]);
    sol.volume = -w;
    verify_solution(d, sol.a, sol.b, sol.q_levels, sol.volume);
    return sol;
}

} // namespace qcvol

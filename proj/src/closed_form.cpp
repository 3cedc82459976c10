#include "qcvol/closed_form.hpp"

#include "qcvol/small_dims.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace qcvol {

std::string_view to_string(VolumeSign sign) {
    return sign == VolumeSign::Negative ? "negative" : "positive";
}

VolumeSign volume_sign_from_string(std::string_view text) {
    if (text == "negative")
        return VolumeSign::Negative;
    if (text == "positive")
        return VolumeSign::Positive;
    throw std::domain_error("unknown volume sign \"" + std::string(text) +
                            "\" (expected \"negative\" or \"positive\")");
}

AuxiliaryInstance::AuxiliaryInstance(std::vector<Rational> c_in, std::vector<Rational> e_in,
                                     Rational alpha_in)
    : c(std::move(c_in)), e(std::move(e_in)), alpha(std::move(alpha_in)) {
    if (c.empty())
        throw std::domain_error("auxiliary instance needs at least one coefficient");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].sign() <= 0)
            throw std::domain_error("auxiliary coefficients must be positive");
        if (i > 0 && c[i] < c[i - 1])
            throw std::domain_error("auxiliary coefficients must be nondecreasing");
    }
    for (const auto& v : e)
        if (v.sign() >= 0)
            throw std::domain_error("auxiliary e-values must be negative");
    if (!(-c.back() < alpha && alpha <= c.back()))
        throw std::domain_error("auxiliary alpha must satisfy -c_k < alpha <= c_k");
}

WScan scan_w_sequence(const std::vector<Rational>& c, const Rational& alpha) {
    const int k = static_cast<int>(c.size());
    WScan out;
    Rational suffix_sum(0);
    for (int i = 1; i <= k; ++i) {
        suffix_sum += c[k - i];
        const Rational w = (suffix_sum - alpha) / Rational(i + 1);
        out.w.push_back(w);
        const Rational threshold = (k - i >= 1) ? c[k - i - 1] : Rational(0);
        if (out.i0 == 0 && w >= threshold)
            out.i0 = i;
    }
    if (out.i0 == 0)
        throw std::logic_error("threshold scan found no crossing index");
    return out;
}

AuxiliarySolution solve_auxiliary(const AuxiliaryInstance& inst) {
    const int k = static_cast<int>(inst.c.size());
    const WScan scan = scan_w_sequence(inst.c, inst.alpha);
    AuxiliarySolution sol;
    sol.i0 = scan.i0;
    sol.w = scan.w[scan.i0 - 1];
    sol.y.assign(k, Rational(0));
    for (int idx = k - scan.i0; idx < k; ++idx)
        sol.y[idx] = inst.c[idx] - sol.w;
    sol.z.assign(inst.e.size(), Rational(0));
    return sol;
}

std::vector<Int> coeffs(int d, VolumeSign sign) {
    std::vector<Int> c;
    if (sign == VolumeSign::Negative) {
        if (d < 7)
            throw std::domain_error(
                "negative-volume coefficients require d >= 7 (3 <= d <= 6 is served "
                "analytically, d = 2 is unsupported); got d = " + std::to_string(d));
        const int half = d / 2;
        if (d % 2 == 0) {
            for (int i = 0; i <= half - 1; ++i)
                c.push_back(binomial(d - 1, i));
        } else if (d % 4 == 1) {
            for (int i = 1; i <= half - 1; i += 2) {
                c.push_back(binomial(d - 1, i));
                c.push_back(binomial(d - 1, i));
            }
        } else { // d mod 4 == 3
            for (int i = 1; i <= half - 2; i += 2) {
                c.push_back(binomial(d - 1, i));
                c.push_back(binomial(d - 1, i));
            }
            c.push_back(binomial(d - 1, half));
        }
        assert(static_cast<int>(c.size()) == half);
    } else {
        if (d < 3)
            throw std::domain_error(
                "positive-volume coefficients require d >= 3 (d = 2 is unsupported); got d = " +
                std::to_string(d));
        const int half = d / 2;
        const int k = (d + 1) / 2 - 1;
        if (d % 2 == 0) {
            for (int i = 1; i <= half - 1; ++i)
                c.push_back(binomial(d - 1, i));
        } else if (d % 4 == 1) {
            c.push_back(binomial(d - 1, 0));
            for (int i = 2; i <= half - 2; i += 2) {
                c.push_back(binomial(d - 1, i));
                c.push_back(binomial(d - 1, i));
            }
            c.push_back(binomial(d - 1, half));
        } else { // d mod 4 == 3
            c.push_back(binomial(d - 1, 0));
            for (int i = 2; i <= half - 1; i += 2) {
                c.push_back(binomial(d - 1, i));
                c.push_back(binomial(d - 1, i));
            }
        }
        assert(static_cast<int>(c.size()) == k);
        (void)k;
    }
    return c;
}

std::vector<Rational> q_levels(const std::vector<Rational>& delta) {
    std::vector<Rational> levels(1, Rational(0));
    levels.reserve(delta.size() + 1);
    for (const auto& step : delta)
        levels.push_back(levels.back() + step);
    return levels;
}

namespace {

ClosedFormSolution from_small_dims(int d) {
    const SmallDimSolution s = solve_small_min(d);
    ClosedFormSolution out;
    out.d = d;
    out.sign = VolumeSign::Negative;
    for (const auto& cand : small_min_candidates(d))
        out.w_sequence.push_back(Rational(d - 1) * cand.y3);
    out.volume = s.volume;
    out.box_edge_a = s.a;
    out.box_edge_b = s.b;
    out.q_levels = s.q_levels;
    for (int j = 1; j <= d; ++j)
        out.delta.push_back(s.q_levels[j] - s.q_levels[j - 1]);
    // The box edge ratio a/(b-a) counts the pinned steps.
    const Rational ratio = s.a / (s.b - s.a);
    assert(ratio.is_integer());
    out.i0 = static_cast<int>(ratio.numerator().get_si());
    return out;
}

} // namespace

ClosedFormSolution extreme_volume(int d, VolumeSign sign) {
    if (d < 3)
        throw std::domain_error(
            "extreme volumes are defined for d >= 3 only (d = 2 is unsupported); got d = " +
            std::to_string(d));
    if (sign == VolumeSign::Negative && d <= 6)
        return from_small_dims(d);

    ClosedFormSolution sol;
    sol.d = d;
    sol.sign = sign;
    sol.coeffs = coeffs(d, sign);
    std::vector<Rational> c(sol.coeffs.begin(), sol.coeffs.end());
    const int k = static_cast<int>(c.size());
    const Rational alpha = (sign == VolumeSign::Negative) ? Rational(1) : Rational(-1);
    const WScan scan = scan_w_sequence(c, alpha);
    sol.w_sequence = scan.w;
    sol.i0 = scan.i0;
    const Rational w = scan.w[scan.i0 - 1];
    sol.volume = (sign == VolumeSign::Negative) ? -w : w;
    sol.box_edge_a = Rational(sol.i0, sol.i0 + 1);
    sol.box_edge_b = Rational(1);

    // Steps of size 1/(i0+1) sit at the top coordinate and at every
    // coordinate of the matching parity whose binomial exceeds the
    // threshold coefficient c_{k-i0}.
    const Rational threshold = (k - scan.i0 >= 1) ? c[k - scan.i0 - 1] : Rational(0);
    const int step_parity = (sign == VolumeSign::Negative) ? (d % 2 == 0 ? 1 : 0)
                                                           : (d % 2 == 0 ? 0 : 1);
    const Rational step = Rational(1, sol.i0 + 1);
    for (int j = 1; j <= d; ++j) {
        const bool on = (j == d) ||
                        (j % 2 == step_parity && Rational(binomial(d - 1, j - 1)) > threshold);
        sol.delta.push_back(on ? step : Rational(0));
    }
    sol.q_levels = q_levels(sol.delta);
    assert(sol.q_levels.back() == Rational(1));
    return sol;
}

Rational terminal_w(int d, VolumeSign sign) {
    if (sign == VolumeSign::Negative) {
        if (d < 7)
            throw std::domain_error("terminal w for the negative case requires d >= 7; got d = " +
                                    std::to_string(d));
        Int p = 1;
        p <<= (d - 2);
        return Rational(p - 1, Int(d / 2 + 1));
    }
    if (d < 3)
        throw std::domain_error("terminal w for the positive case requires d >= 3; got d = " +
                                std::to_string(d));
    Int p = 1;
    if (d % 2 == 0) {
        p <<= (d - 1);
        return Rational(p, Int(d));
    }
    p <<= (d - 2);
    return Rational(p, Int((d + 1) / 2));
}

MinMaxComparison compare_min_max(int d) {
    if (d % 2 != 0 || d < 8)
        throw std::domain_error("min/max comparison is defined for even d >= 8; got d = " +
                                std::to_string(d));
    const ClosedFormSolution neg = extreme_volume(d, VolumeSign::Negative);
    const ClosedFormSolution pos = extreme_volume(d, VolumeSign::Positive);
    MinMaxComparison cmp;
    cmp.i0_min = neg.i0;
    cmp.i0_max = pos.i0;
    cmp.i0_diff = neg.i0 - pos.i0;
    if (cmp.i0_diff == 0)
        cmp.volume_gap = pos.volume + neg.volume; // w_+ - w_-
    return cmp;
}

} // namespace qcvol

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lambert_w.hpp"
#include "rootfind.hpp"

namespace genlambert {

// forward map y e^y + r y and its derivative
inline double f_r(double r, double y) { return y * std::exp(y) + r * y; }
inline double f_r_prime(double r, double y) { return std::exp(y) * (1.0 + y) + r; }

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool contains(double v) const { return v >= lo && v <= hi; }
};

struct BranchInfo {
    int id = 0;
    Interval domain;  // admissible x
    Interval range;   // produced y
    bool increasing = true;
};

struct CriticalPoints {
    std::optional<double> alpha;  // smaller root of f_r' (0 < r < 1/e^2)
    std::optional<double> beta;   // larger root of f_r' (0 < r < 1/e^2)
    std::optional<double> gamma;  // single root of f_r' (r < 0)
};

enum class Regime {
    classic = 0,       // r = 0
    single = 1,        // r > 1/e^2: strictly increasing bijection
    degenerate = 2,    // r = 1/e^2: bijection with a vertical tangent
    three_branch = 3,  // 0 < r < 1/e^2
    two_branch = 4,    // r < 0
};

inline const char* regime_name(Regime g) {
    switch (g) {
        case Regime::classic: return "classic";
        case Regime::single: return "single";
        case Regime::degenerate: return "degenerate";
        case Regime::three_branch: return "three_branch";
        case Regime::two_branch: return "two_branch";
    }
    return "?";
}

struct BranchLayout {
    double r = 0.0;
    Regime regime = Regime::classic;
    CriticalPoints critical;
    std::optional<double> kink_x;  // abscissa of the vertical tangent (degenerate only)
    std::vector<BranchInfo> branches;

    const BranchInfo* find(int id) const {
        for (const auto& b : branches)
            if (b.id == id) return &b;
        return nullptr;
    }
};

inline BranchLayout classify(double r) {
    if (!std::isfinite(r)) throw std::invalid_argument("classify: r must be finite");
    const double inf = std::numeric_limits<double>::infinity();
    BranchLayout L;
    L.r = r;
    if (r == 0.0) {
        L.regime = Regime::classic;
        L.branches = {
            {0, {-kInvE, inf}, {-1.0, inf}, true},
            {-1, {-kInvE, 0.0}, {-inf, -1.0}, false},
        };
        return L;
    }
    const double em2 = std::exp(-2.0);
    if (std::abs(r - em2) <= 1e-15) {
        L.regime = Regime::degenerate;
        L.kink_x = -4.0 * em2;
        L.critical.alpha = -2.0;
        L.critical.beta = -2.0;
        L.branches = {{0, {-inf, inf}, {-inf, inf}, true}};
        return L;
    }
    if (r > em2) {
        L.regime = Regime::single;
        L.branches = {{0, {-inf, inf}, {-inf, inf}, true}};
        return L;
    }
    if (r > 0.0) {
        L.regime = Regime::three_branch;
        double alpha = lambert_w(-1, -r * kE) - 1.0;
        double beta = lambert_w(0, -r * kE) - 1.0;
        L.critical.alpha = alpha;
        L.critical.beta = beta;
        double xa = f_r(r, alpha);  // local maximum value
        double xb = f_r(r, beta);   // local minimum value, xb < xa
        L.branches = {
            {0, {xb, inf}, {beta, inf}, true},
            {-1, {xb, xa}, {alpha, beta}, false},
            {-2, {-inf, xa}, {-inf, alpha}, true},
        };
        return L;
    }
    L.regime = Regime::two_branch;
    double gamma = lambert_w(0, -r * kE) - 1.0;
    L.critical.gamma = gamma;
    double xg = f_r(r, gamma);
    L.branches = {
        {0, {xg, inf}, {gamma, inf}, true},
        {-1, {xg, inf}, {-inf, gamma}, false},
    };
    return L;
}

inline const BranchInfo& branch_containing_value(const BranchLayout& L, double y) {
    for (const auto& b : L.branches)
        if (b.range.contains(y)) return b;
    throw std::logic_error("branch_containing_value: ranges should cover the reals");
}

namespace detail {

inline double initial_seed(const BranchLayout& L, const BranchInfo& B, double r, double x) {
    const double inf = std::numeric_limits<double>::infinity();
    if (B.range.contains(0.0) && r != -1.0) {
        double rho;  // rough distance from 0 to the nearest fold value
        switch (L.regime) {
            case Regime::three_branch:
            case Regime::two_branch: rho = std::abs(B.domain.lo); break;
            case Regime::degenerate: rho = 4.0 * std::exp(-2.0); break;
            default: rho = std::abs(1.0 + r) * kInvE; break;
        }
        if (std::abs(x) <= 0.5 * rho) {
            double u = 1.0 + r;
            double t1 = x / u;
            return t1 * (1.0 - t1 / u + t1 * t1 * (3.0 - r) / (2.0 * u * u));
        }
    }
    if (B.increasing && B.range.hi == inf && x > 8.0 * (kE + std::abs(r))) {
        double Lx = std::log(x);
        double inner = 1.0 / Lx - r / x;
        return (inner > 0.0) ? Lx + std::log(inner) : Lx - std::log(Lx);
    }
    if (r > 0.0 && B.increasing && B.range.lo == -inf && x < -8.0 * (kE + r)) return x / r;
    if (r < 0.0 && !B.increasing && x > 8.0 * (kE - r)) return x / r;
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace detail

struct EvalResult {
    double value = 0.0;
    double residual = 0.0;  // |f_r(value) - x|
    int iterations = 0;
    int branch = 0;
};

inline EvalResult w_r(double r, int branch, double x) {
    if (!std::isfinite(r) || !std::isfinite(x)) throw std::invalid_argument("w_r: non-finite input");
    BranchLayout L = classify(r);
    if (L.regime == Regime::classic) {
        if (branch != 0 && branch != -1) throw std::invalid_argument("w_r: no such branch for r = 0");
        int iters = 0;
        double w = detail::lambert_w_impl(branch, x, &iters);
        return {w, std::abs(f_r(0.0, w) - x), iters, branch};
    }
    const BranchInfo* B = L.find(branch);
    if (!B) throw std::invalid_argument("w_r: no such branch for this r");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto near = [](double u, double v) {
        return std::abs(u - v) <= 8.0 * eps * std::max(1.0, std::abs(v));
    };
    // fold points are multiple roots of f_r - x, so iteration alone could only
    // locate them to a fractional power of eps; snap to the known range end
    if (std::isfinite(B->domain.lo) && near(x, B->domain.lo)) {
        double y = B->increasing ? B->range.lo : B->range.hi;
        return {y, std::abs(f_r(r, y) - x), 0, branch};
    }
    if (std::isfinite(B->domain.hi) && near(x, B->domain.hi)) {
        double y = B->increasing ? B->range.hi : B->range.lo;
        return {y, std::abs(f_r(r, y) - x), 0, branch};
    }
    if (L.kink_x && near(x, *L.kink_x)) return {-2.0, std::abs(f_r(r, -2.0) - x), 0, branch};
    if (x < B->domain.lo || x > B->domain.hi) throw std::domain_error("w_r: x outside branch domain");
    if (x == 0.0 && B->range.contains(0.0)) return {0.0, 0.0, 0, branch};

    double seed = detail::initial_seed(L, *B, r, x);
    if (std::isfinite(seed)) seed = std::clamp(seed, B->range.lo, B->range.hi);
    auto fr = [&](double y) { return f_r(r, y); };
    auto dfr = [&](double y) { return f_r_prime(r, y); };

    double rlo = B->range.lo, rhi = B->range.hi;
    double lo, hi;
    if (std::isfinite(rhi)) {
        hi = rhi;
    } else {
        double u = std::isfinite(seed) ? seed + 1.0 : (std::isfinite(rlo) ? rlo + 1.0 : 1.0);
        if (std::isfinite(rlo)) u = std::max(u, rlo + 1.0);
        double step = 1.0;
        while (fr(u) < x) {
            u += step;
            step *= 2.0;
            if (u > 1e306) throw std::domain_error("w_r: root not representable in double");
        }
        hi = u;
    }
    if (std::isfinite(rlo)) {
        lo = rlo;
    } else {
        double u = std::isfinite(seed) ? seed - 1.0 : (std::isfinite(rhi) ? rhi - 1.0 : -1.0);
        if (std::isfinite(rhi)) u = std::min(u, rhi - 1.0);
        double step = 1.0;
        while (B->increasing ? (fr(u) > x) : (fr(u) < x)) {
            u -= step;
            step *= 2.0;
            if (u < -1e306) throw std::domain_error("w_r: root not representable in double");
        }
        lo = u;
    }
    auto rr = detail::solve_monotone(fr, dfr, x, lo, hi, B->increasing, seed);
    return {rr.y, rr.residual, rr.iterations, branch};
}

// 1 / (e^W (1 + W) + r); throws where the inverse has a vertical tangent
inline double w_r_derivative(double r, int branch, double x) {
    double W = w_r(r, branch, x).value;
    double ew = std::exp(W);
    double denom = ew * (1.0 + W) + r;
    if (std::isinf(denom)) return 0.0;
    double scale = ew * (1.0 + std::abs(W)) + std::abs(r);
    if (std::abs(denom) <= 1e-10 * scale)
        throw std::domain_error("w_r_derivative: slope vanishes at a branch fold");
    return 1.0 / denom;
}

// antiderivative of W_r along a branch: r W^2 / 2 + e^W (W^2 - W + 1)
inline double w_r_antiderivative(double r, int branch, double x) {
    double W = w_r(r, branch, x).value;
    return 0.5 * r * W * W + std::exp(W) * (1.0 + W * (W - 1.0));
}

enum class AsymptoticDirection { plus_infinity, minus_infinity };

// leading behaviour: log x + log(1/log x - r/x) toward +infinity on branch 0,
// and x/r toward -infinity on the branch that reaches it (requires r > 0)
inline double w_r_asymptotic(double r, double x, AsymptoticDirection dir) {
    if (!std::isfinite(r) || !std::isfinite(x))
        throw std::invalid_argument("w_r_asymptotic: non-finite input");
    if (dir == AsymptoticDirection::plus_infinity) {
        if (!(x > 1.0)) throw std::domain_error("w_r_asymptotic: need x > 1 toward +infinity");
        double Lx = std::log(x);
        double inner = 1.0 / Lx - r / x;
        if (!(inner > 0.0))
            throw std::domain_error("w_r_asymptotic: x too small for this r toward +infinity");
        return Lx + std::log(inner);
    }
    if (!(r > 0.0))
        throw std::domain_error("w_r_asymptotic: no branch reaches -infinity unless r > 0");
    if (!(x < 0.0)) throw std::domain_error("w_r_asymptotic: need x < 0 toward -infinity");
    return x / r;
}

// W_1(1): unique real solution of y e^y + y = 1
inline double omega1_constant() {
    static const double v = w_r(1.0, 0, 1.0).value;
    return v;
}

// evaluates W_r((x + r) log x), which should recover log x for any x > 0
inline double log_identity_check(double r, double x) {
    if (!(x > 0.0)) throw std::domain_error("log_identity_check: need x > 0");
    double lx = std::log(x);
    BranchLayout L = classify(r);
    const BranchInfo& b = branch_containing_value(L, lx);
    return w_r(r, b.id, (x + r) * lx).value;
}

}  // namespace genlambert

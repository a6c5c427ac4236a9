#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace genlambert {

inline constexpr double kE = 2.71828182845904523536;
inline constexpr double kInvE = 0.36787944117144232160;  // 1/e

namespace detail {

// expansion around the branch point x = -1/e in p = +-sqrt(2 (e x + 1));
// p >= 0 selects branch 0, p <= 0 selects branch -1
inline double branch_point_series(double p) {
    return -1.0 +
           p * (1.0 +
                p * (-1.0 / 3.0 +
                     p * (11.0 / 72.0 +
                          p * (-43.0 / 540.0 +
                               p * (769.0 / 17280.0 + p * (-221.0 / 8505.0))))));
}

inline double halley_w(double x, double w, int& iters) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int i = 0; i < 100; ++i) {
        ++iters;
        double ew = std::exp(w);
        double t = w * ew - x;
        if (t == 0.0) return w;
        double p = w + 1.0;
        if (std::abs(p) < 1e-6) return w;  // at the branch point the seed is already best
        double dt = t / (ew * p - 0.5 * (p + 1.0) * t / p);
        double wn = w - dt;
        if (std::abs(dt) <= 4.0 * eps * std::abs(wn) + 1e-300) return wn;
        w = wn;
    }
    return w;
}

// Newton on w + log(sign * w) = L; sign = +1 for branch 0, -1 for branch -1.
// Used where w e^w would overflow or underflow.
inline double log_form_newton(double L, double w, double sign, int& iters) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int i = 0; i < 60; ++i) {
        ++iters;
        double g = w + std::log(sign * w) - L;
        double dw = g / (1.0 + 1.0 / w);
        double wn = w - dw;
        if (!std::isfinite(wn)) break;
        w = wn;
        if (std::abs(dw) <= 4.0 * eps * std::abs(w)) break;
    }
    return w;
}

inline double lambert_w_impl(int branch, double x, int* iterations) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    int iters = 0;
    double w = 0.0;
    if (branch != 0 && branch != -1) throw std::invalid_argument("lambert_w: branch must be 0 or -1");
    if (std::isnan(x)) throw std::invalid_argument("lambert_w: x is NaN");

    double q = 2.0 * std::fma(kE, x, 1.0);  // 2 (e x + 1), exact-ish near the branch point
    if (q < 0.0) {
        if (q >= -16.0 * eps) {
            q = 0.0;  // within rounding of -1/e
        } else {
            throw std::domain_error("lambert_w: x below -1/e");
        }
    }

    if (branch == 0) {
        if (x == 0.0) {
            if (iterations) *iterations = 0;
            return x;  // preserves signed zero
        }
        if (q <= 0.25) {  // |p| <= 0.5
            w = branch_point_series(std::sqrt(q));
            w = halley_w(x, w, iters);
        } else if (x > 1e307) {
            // solve w + log w = log x; avoids overflow at the domain edge
            double L = std::log(x);
            w = log_form_newton(L, L - std::log(L), 1.0, iters);
        } else {
            if (x < 0.0) {
                w = x * (1.0 + x * (-1.0 + x * 1.5));  // Taylor seed, |x| < 0.32 here
            } else if (x < kE) {
                w = std::log1p(x);
            } else {
                double L = std::log(x), lL = std::log(L);
                w = L - lL + lL / L;
            }
            w = halley_w(x, w, iters);
        }
        if (iterations) *iterations = iters;
        return w;
    }

    // branch -1: defined on [-1/e, 0)
    if (x >= 0.0) throw std::domain_error("lambert_w: branch -1 needs x in [-1/e, 0)");
    if (q <= 0.25) {
        w = branch_point_series(-std::sqrt(q));
        w = halley_w(x, w, iters);
    } else {
        double L1 = std::log(-x), L2 = std::log(-L1);
        w = L1 - L2 + L2 / L1;
        if (x > -1e-290) {
            // w e^w underflows near 0-; solve w + log(-w) = log(-x) instead
            w = log_form_newton(L1, w, -1.0, iters);
        } else {
            w = halley_w(x, w, iters);
        }
    }
    if (iterations) *iterations = iters;
    return w;
}

}  // namespace detail

// real branches of w e^w = x; branch 0 on [-1/e, inf), branch -1 on [-1/e, 0)
inline double lambert_w(int branch, double x) { return detail::lambert_w_impl(branch, x, nullptr); }

inline double lambert_w(int branch, double x, int& iterations) {
    return detail::lambert_w_impl(branch, x, &iterations);
}

// W(1): the omega constant
inline double omega_constant() {
    static const double om = lambert_w(0, 1.0);
    return om;
}

}  // namespace genlambert

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace genlambert::detail {

struct RootResult {
    double y = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Newton on a strictly monotone f over the finite bracket [lo, hi] with the
// root inside; any step that leaves the bracket or degenerates falls back to
// bisection, so progress is guaranteed.
template <class F, class DF>
RootResult solve_monotone(F&& f, DF&& df, double target, double lo, double hi, bool increasing,
                          double seed) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double a = lo, b = hi;
    double y = std::isfinite(seed) ? std::clamp(seed, a, b) : 0.5 * (a + b);
    int it = 0;
    for (; it < 100; ++it) {
        double gy = f(y) - target;
        if (gy == 0.0) break;
        bool root_above = increasing ? (gy < 0.0) : (gy > 0.0);
        if (root_above) a = y; else b = y;
        if (b - a <= eps * (std::abs(a) + std::abs(b))) {
            y = 0.5 * (a + b);
            break;
        }
        double yn = y - gy / df(y);
        if (!std::isfinite(yn) || yn <= a || yn >= b) yn = 0.5 * (a + b);
        if (std::abs(yn - y) <= 2.0 * eps * std::abs(yn) + 1e-300) {
            y = yn;
            break;
        }
        y = yn;
    }
    return {y, std::abs(f(y) - target), it};
}

inline double powi(double base, unsigned e) {
    double r = 1.0, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace genlambert::detail

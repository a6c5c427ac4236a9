#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"
#include "exact.hpp"
#include "rlambert.hpp"
#include "rootfind.hpp"

namespace genlambert {

// generalized Laguerre L_n^(alpha) by the three-term recurrence, which is
// forward-stable for the negative arguments used here
template <class T>
T laguerre_g(unsigned n, const T& alpha, const T& x) {
    if (n == 0) return T(1);
    T L0(1);
    T L1 = T(1) + alpha - x;
    for (unsigned m = 1; m < n; ++m) {
        T L2 = ((T(2 * m + 1) + alpha - x) * L1 - (T(m) + alpha) * L0) / T(m + 1);
        L0 = L1;
        L1 = L2;
    }
    return L1;
}

inline double laguerre(unsigned n, double alpha, double x) { return laguerre_g<double>(n, alpha, x); }

// Bessel polynomial B_n(z) = sum_k (n+k)! / (k! (n-k)!) (z/2)^k
inline double bessel_poly(unsigned n, double z) {
    double term = 1.0, sum = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        term *= static_cast<double>(n + k + 1) * static_cast<double>(n - k) / (k + 1.0) * (0.5 * z);
        sum += term;
    }
    return sum;
}

struct SeriesExpansion {
    double constant_term = 0.0;
    std::vector<double> coeffs;        // coeffs[i] multiplies x^(i+1)
    std::vector<BigRat> exact_coeffs;  // filled when the coefficients are exact rationals
    std::optional<double> radius;      // convergence radius when known
    std::optional<int> branch_hint;    // which branch the expansion tracks, when meaningful
};

// distance from 0 to the nearest fold value of y e^y + r y, i.e. where the
// inverse stops being analytic; unknown (nullopt) when the folds are complex
inline std::optional<double> taylor_radius_bound(double r) {
    BranchLayout L = classify(r);
    switch (L.regime) {
        case Regime::classic: return kInvE;
        case Regime::degenerate: return 4.0 * std::exp(-2.0);
        case Regime::three_branch: return std::abs(f_r(r, *L.critical.beta));
        case Regime::two_branch: return std::abs(f_r(r, *L.critical.gamma));
        default: return std::nullopt;
    }
}

// Taylor coefficients of W_r at 0: c_1 = 1/(r+1) and
// c_n = M_{n-1}(1/(r+1); n) / ((r+1)^n n!) computed in exact arithmetic
inline SeriesExpansion series_wr(const BigRat& r, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("series_wr: need n_terms >= 1");
    if (r == -1) throw std::domain_error("series_wr: r = -1 puts a fold at the expansion point");
    SeriesExpansion se;
    double rd = mpq_get_d(r.get_mpq_t());
    se.branch_hint = (rd > -1.0) ? 0 : -1;
    se.radius = taylor_radius_bound(rd);
    BigRat u = r + 1;
    BigRat y = BigRat(1) / u;
    BigRat upow = u;  // tracks u^n
    for (int n = 1; n <= n_terms; ++n) {
        BigRat c;
        if (n == 1) {
            c = y;
        } else {
            c = m_eval(m_polynomial(static_cast<unsigned>(n), static_cast<unsigned>(n - 1)), y) /
                (upow * BigRat(factorial(static_cast<unsigned long>(n))));
        }
        se.exact_coeffs.push_back(c);
        se.coeffs.push_back(c.get_d());
        upow *= u;
    }
    return se;
}

inline SeriesExpansion series_wr(double r, int n_terms) {
    if (!std::isfinite(r)) throw std::invalid_argument("series_wr: non-finite r");
    return series_wr(rat_from_double(r), n_terms);
}

// convergence radius of the expansion of W(t, s; a) about a = 0, for t < s
inline double radius_wts(double t, double s) {
    if (!(t < s)) throw std::domain_error("radius_wts: need t < s");
    return std::exp(0.5 * (t + s) - 2.0 * std::sqrt(s - t));
}

// Taylor coefficients of W(t, s; a) about a = 0:
// c_n = (t - s) L_{n-1}^(1)(n (t - s)) e^{-n t} / n, constant term t
inline SeriesExpansion series_wts(double t, double s, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("series_wts: need n_terms >= 1");
    if (!std::isfinite(t) || !std::isfinite(s))
        throw std::invalid_argument("series_wts: non-finite parameter");
    if (t == s) throw std::domain_error("series_wts: need t != s (equal parameters cancel)");
    double T = t - s;
    SeriesExpansion se;
    se.constant_term = t;
    if (t < s) se.radius = radius_wts(t, s);
    for (int n = 1; n <= n_terms; ++n) {
        double c = T * laguerre(static_cast<unsigned>(n - 1), 1.0, n * T) *
                   std::exp(-static_cast<double>(n) * t) / n;
        if (!std::isfinite(c))
            throw std::invalid_argument("series_wts: coefficient overflow; reduce n_terms");
        se.coeffs.push_back(c);
    }
    return se;
}

// Taylor coefficients of W(t1, t2; a) about a = 0, branch through t1:
// C_n = -(1/(n n!)) (n e^{-t1} / (t2 - t1))^n B_{n-1}(-2 / (n (t2 - t1)))
inline SeriesExpansion series_wtt(double t1, double t2, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("series_wtt: need n_terms >= 1");
    if (!std::isfinite(t1) || !std::isfinite(t2))
        throw std::invalid_argument("series_wtt: non-finite parameter");
    if (t1 == t2) throw std::domain_error("series_wtt: need t1 != t2");
    double T = t2 - t1;
    SeriesExpansion se;
    se.constant_term = t1;
    double nfact = 1.0;
    for (int n = 1; n <= n_terms; ++n) {
        nfact *= n;
        double base = n * std::exp(-t1) / T;
        double c = -detail::powi(base, static_cast<unsigned>(n)) *
                   bessel_poly(static_cast<unsigned>(n - 1), -2.0 / (n * T)) / (n * nfact);
        if (!std::isfinite(c))
            throw std::invalid_argument("series_wtt: coefficient overflow; reduce n_terms");
        se.coeffs.push_back(c);
    }
    return se;
}

// averages |c_n / c_{n+1}| over the last ten consecutive pairs; a root-test
// style probe of the convergence radius from the coefficients alone
inline double estimate_radius(const std::vector<double>& coeffs) {
    if (coeffs.size() < 20)
        throw std::invalid_argument("estimate_radius: need at least 20 coefficients");
    std::size_t N = coeffs.size();
    for (std::size_t i = N - 20; i < N; ++i)
        if (coeffs[i] == 0.0 || !std::isfinite(coeffs[i]))
            throw std::domain_error("estimate_radius: zero or non-finite trailing coefficient");
    double acc = 0.0;
    for (std::size_t i = N - 11; i + 1 < N; ++i) acc += std::abs(coeffs[i] / coeffs[i + 1]);
    return acc / 10.0;
}

struct EvalOutcome {
    double value = 0.0;
    bool slow_convergence = false;  // |x| within 10% of the known radius or beyond
};

inline EvalOutcome eval_series(const SeriesExpansion& se, double x, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("eval_series: need n_terms >= 1");
    std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(n_terms), se.coeffs.size());
    double acc = 0.0;
    for (std::size_t i = m; i-- > 0;) acc = acc * x + se.coeffs[i];
    double value = se.constant_term + x * acc;
    bool slow = se.radius.has_value() && std::abs(x) > 0.9 * *se.radius;
    return {value, slow};
}

}  // namespace genlambert

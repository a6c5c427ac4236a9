#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"
#include "exact.hpp"
#include "highprec.hpp"
#include "lambert_w.hpp"

namespace genlambert::oracle {

// exhaustive census of set partitions of [n] by block count, via restricted
// growth strings; deliberately brute force
inline std::map<unsigned, BigInt> enumerate_partitions(unsigned n) {
    if (n > 10) throw std::invalid_argument("enumerate_partitions: exhaustive mode needs n <= 10");
    std::map<unsigned, BigInt> counts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
        if (i == n) {
            counts[blocks] += 1;
            return;
        }
        for (unsigned b = 0; b <= blocks; ++b) rec(i + 1, b == blocks ? blocks + 1 : blocks);
    };
    rec(0, 0);
    return counts;
}

// counts ordered set partitions of [k] with `bars` indistinguishable bars
// placed in the gaps around the blocks; blocks enumerated explicitly
inline BigInt enumerate_barred(unsigned k, unsigned bars) {
    if (k > 7 || bars > 5)
        throw std::invalid_argument("enumerate_barred: exhaustive mode needs k <= 7, bars <= 5");
    BigInt total = 0;
    // placements of j bars into g gaps, counted by walking every composition
    std::function<BigInt(unsigned, unsigned)> placements = [&](unsigned j, unsigned gaps) -> BigInt {
        if (gaps == 1) return BigInt(1);
        BigInt s = 0;
        for (unsigned first = 0; first <= j; ++first) s += placements(j - first, gaps - 1);
        return s;
    };
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned blocks) {
        if (remaining == 0) {
            total += placements(bars, blocks + 1);
            return;
        }
        // every nonempty subset of the remaining elements can be the next block
        for (unsigned sub = remaining; sub; sub = (sub - 1) & remaining)
            rec(remaining ^ sub, blocks + 1);
    };
    rec((1u << k) - 1, 0);
    return total;
}

// arbitrary-order derivative by central differences with Richardson
// extrapolation, all in 256-bit arithmetic; raise levels when the target
// magnitude outgrows the default table's truncation error
inline Real256 highprec_derivative(const std::function<Real256(const Real256&)>& f, unsigned order,
                                   const Real256& at, int levels = 8) {
    if (order == 0) return f(at);
    if (levels < 2 || levels > 16)
        throw std::invalid_argument("highprec_derivative: levels must be in [2, 16]");
    std::vector<std::vector<Real256>> tab(levels, std::vector<Real256>(levels));
    Real256 h0 = Real256(1) / Real256(16);
    Real256 half = Real256(1) / Real256(2);
    for (int i = 0; i < levels; ++i) {
        Real256 h = h0 / Real256(static_cast<unsigned long>(1u << i));
        Real256 acc(0);
        for (unsigned j = 0; j <= order; ++j) {
            Real256 node = at + h * (Real256(static_cast<unsigned long>(order)) * half -
                                     Real256(static_cast<long>(j)));
            Real256 term = Real256(binomial(order, j)) * f(node);
            if (j % 2)
                acc -= term;
            else
                acc += term;
        }
        tab[i][0] = acc / pow_ui(h, order);
        for (int j = 1; j <= i; ++j) {
            Real256 w = pow_ui(Real256(4), static_cast<unsigned long>(j));
            tab[i][j] = (w * tab[i][j - 1] - tab[i - 1][j - 1]) / (w - Real256(1));
        }
    }
    return tab[levels - 1][levels - 1];
}

// n-th Taylor coefficient of the inverse of y e^y + r y at 0, from the
// Lagrange inversion integrand (e^w + r)^{-n} differentiated n-1 times
inline double lagrange_coefficient_oracle(double r, unsigned n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("lagrange_coefficient_oracle: supported range is 1 <= n <= 8");
    if (std::abs(1.0 + r) < 1e-6)
        throw std::domain_error("lagrange_coefficient_oracle: r too close to -1");
    auto f = [&](const Real256& w) {
        Real256 base = exp(w) + Real256(r);
        return Real256(1) / pow_ui(base, n);
    };
    Real256 d = highprec_derivative(f, n - 1, Real256(0.0));
    return (d / Real256(factorial(n))).to_double();
}

// adaptive Simpson quadrature; throws if the tolerance cannot be met
inline double quadrature(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(tol > 0.0) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("quadrature: bad bounds or tolerance");
    if (lo == hi) return 0.0;
    double sign = 1.0;
    if (lo > hi) {
        std::swap(lo, hi);
        sign = -1.0;
    }
    auto simpson = [](double a, double b, double fa, double fm, double fb) {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    };
    std::function<double(double, double, double, double, double, double, double, int)> adapt =
        [&](double a, double b, double fa, double fm, double fb, double whole, double tl,
            int depth) -> double {
        double mid = 0.5 * (a + b);
        double lm = 0.5 * (a + mid), rm = 0.5 * (mid + b);
        double flm = f(lm), frm = f(rm);
        double left = simpson(a, mid, fa, flm, fm);
        double right = simpson(mid, b, fm, frm, fb);
        double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tl) return left + right + delta / 15.0;
        if (depth <= 0) throw std::runtime_error("quadrature: did not converge to tolerance");
        return adapt(a, mid, fa, flm, fm, left, 0.5 * tl, depth - 1) +
               adapt(mid, b, fm, frm, fb, right, 0.5 * tl, depth - 1);
    };
    double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    return sign * adapt(lo, hi, fa, fm, fb, simpson(lo, hi, fa, fm, fb), tol, 48);
}

// Bell numbers from the Bell triangle
inline BigInt bell_exact(unsigned n) {
    if (n == 0) return BigInt(1);
    std::vector<BigInt> row{BigInt(1)};
    for (unsigned i = 2; i <= n; ++i) {
        std::vector<BigInt> next;
        next.reserve(i);
        next.push_back(row.back());
        for (std::size_t j = 0; j < row.size(); ++j) next.push_back(next[j] + row[j]);
        row = std::move(next);
    }
    return row.back();
}

// log of a positive big integer without overflowing double
inline double log_bigint(const BigInt& z) {
    if (z <= 0) throw std::domain_error("log_bigint: needs a positive value");
    long e2 = 0;
    double d = mpz_get_d_2exp(&e2, z.get_mpz_t());
    return std::log(d) + static_cast<double>(e2) * 0.6931471805599453;
}

// closed-form estimate of log B_n driven by W(n)
inline double bell_lovasz(unsigned n) {
    if (n < 2) throw std::invalid_argument("bell_lovasz: needs n >= 2");
    double nd = static_cast<double>(n);
    double w = lambert_w(0, nd);
    double ln = std::log(nd);
    return -0.5 * ln + (nd + 0.5) * (ln - std::log(w)) + nd / w - nd - 1.0;
}

enum class ForwardMap { classic_w, r_lambert, gen_ts, gen_tt };

struct ForwardParams {
    double r = 0.0;
    double t = 0.0, s = 0.0, c = 1.0;
    double t1 = 0.0, t2 = 0.0;
};

// signed residual of the chosen forward map at (x, y), in 256-bit arithmetic
inline double highprec_residual(ForwardMap kind, const ForwardParams& p, double x, double y) {
    Real256 X(x), Y(y), v;
    switch (kind) {
        case ForwardMap::classic_w: v = Y * exp(Y) - X; break;
        case ForwardMap::r_lambert: v = Y * exp(Y) + Real256(p.r) * Y - X; break;
        case ForwardMap::gen_ts: {
            if (y == p.s) throw std::domain_error("highprec_residual: y hits the excluded point s");
            v = exp(Real256(p.c) * Y) * (Y - Real256(p.t)) / (Y - Real256(p.s)) - X;
            break;
        }
        case ForwardMap::gen_tt:
            v = exp(Y) * (Y - Real256(p.t1)) * (Y - Real256(p.t2)) - X;
            break;
    }
    return v.to_double();
}

}  // namespace genlambert::oracle

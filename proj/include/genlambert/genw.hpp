#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rlambert.hpp"
#include "rootfind.hpp"

namespace genlambert {

// parameters of e^{c x} prod_i (x - t_i) / prod_j (x - s_j) = a
struct GenWParams {
    std::vector<double> uppers;  // t_i
    std::vector<double> lowers;  // s_j
    double c = 1.0;
    double a = 0.0;
};

inline double forward_general(const GenWParams& p, double x) {
    double v = std::exp(p.c * x);
    for (double t : p.uppers) v *= (x - t);
    for (double s : p.lowers) v /= (x - s);
    return v;
}

// cancels parameters shared by both lists, then rescales x' = c x so that the
// canonical problem has c = 1: t' = c t, s' = c s, a' = a c^(n - m)
inline GenWParams canonicalize(GenWParams p) {
    if (!std::isfinite(p.a)) throw std::invalid_argument("canonicalize: non-finite a");
    if (p.c == 0.0 || !std::isfinite(p.c))
        throw std::invalid_argument("canonicalize: c must be nonzero and finite");
    for (double v : p.uppers)
        if (!std::isfinite(v)) throw std::invalid_argument("canonicalize: non-finite parameter");
    for (double v : p.lowers)
        if (!std::isfinite(v)) throw std::invalid_argument("canonicalize: non-finite parameter");
    for (std::size_t i = 0; i < p.uppers.size();) {
        auto it = std::find(p.lowers.begin(), p.lowers.end(), p.uppers[i]);
        if (it != p.lowers.end()) {
            p.lowers.erase(it);
            p.uppers.erase(p.uppers.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    int n = static_cast<int>(p.uppers.size());
    int m = static_cast<int>(p.lowers.size());
    for (double& t : p.uppers) t *= p.c;
    for (double& s : p.lowers) s *= p.c;
    p.a *= std::pow(p.c, n - m);
    p.c = 1.0;
    return p;
}

struct Root {
    double x = 0.0;
    double residual = 0.0;
    int multiplicity = 1;
    int branch = 0;  // which monotone piece or W_r branch produced it
};

struct RootSet {
    std::vector<Root> roots;
};

namespace detail {

inline void add_root(RootSet& rs, double x, double residual, int branch) {
    for (auto& q : rs.roots) {
        if (std::abs(x - q.x) <= 1e-9 * std::max(1.0, std::abs(q.x))) {
            ++q.multiplicity;
            return;
        }
    }
    rs.roots.push_back({x, residual, 1, branch});
}

inline void sort_roots(RootSet& rs) {
    std::sort(rs.roots.begin(), rs.roots.end(),
              [](const Root& a, const Root& b) { return a.x < b.x; });
}

}  // namespace detail

// e^x = a
inline double solve_empty(double a) {
    if (!(a > 0.0)) throw std::domain_error("solve_empty: e^x = a needs a > 0");
    return std::log(a);
}

inline double forward_ts(double t, double s, double c, double x) {
    return std::exp(c * x) * (x - t) / (x - s);
}

// e^{c x} (x - t) / (x - s) = a, via y = c (x - t) and W_{r'} with
// r' = -a e^{-c t}, argument c a e^{-c t} (t - s)
inline RootSet solve_ts(double t, double s, double c, double a) {
    if (!std::isfinite(t) || !std::isfinite(s) || !std::isfinite(c) || !std::isfinite(a))
        throw std::invalid_argument("solve_ts: non-finite input");
    if (c == 0.0) throw std::invalid_argument("solve_ts: c must be nonzero");
    if (t == s) throw std::invalid_argument("solve_ts: t == s cancels; use solve_empty");
    double ect = std::exp(-c * t);
    double rp = -a * ect;
    double arg = c * a * ect * (t - s);
    if (!std::isfinite(rp) || !std::isfinite(arg))
        throw std::domain_error("solve_ts: reduction overflows");
    BranchLayout L = classify(rp);
    RootSet rs;
    for (const auto& b : L.branches) {
        if (!b.domain.contains(arg)) continue;
        EvalResult er;
        try {
            er = w_r(rp, b.id, arg);
        } catch (const std::domain_error&) {
            continue;
        }
        double x = t + er.value / c;
        if (x == s) continue;
        detail::add_root(rs, x, std::abs(forward_ts(t, s, c, x) - a), b.id);
    }
    detail::sort_roots(rs);
    return rs;
}

inline double forward_shifted(double t, double c, double r, double x) {
    return (x - t) * std::exp(c * x) + r * (x - t);
}

// (x - t) e^{c x} + r (x - t) = a, via y = c (x - t) and W_{r'} with
// r' = r e^{-c t}, argument c a e^{-c t}; r = 0 covers e^{c x} (x - t) = a
inline RootSet solve_shifted(double t, double c, double r, double a) {
    if (!std::isfinite(t) || !std::isfinite(c) || !std::isfinite(r) || !std::isfinite(a))
        throw std::invalid_argument("solve_shifted: non-finite input");
    if (c == 0.0) throw std::invalid_argument("solve_shifted: c must be nonzero");
    double ect = std::exp(-c * t);
    double rp = r * ect;
    double arg = c * a * ect;
    if (!std::isfinite(rp) || !std::isfinite(arg))
        throw std::domain_error("solve_shifted: reduction overflows");
    BranchLayout L = classify(rp);
    RootSet rs;
    for (const auto& b : L.branches) {
        if (!b.domain.contains(arg)) continue;
        EvalResult er;
        try {
            er = w_r(rp, b.id, arg);
        } catch (const std::domain_error&) {
            continue;
        }
        double x = t + er.value / c;
        detail::add_root(rs, x, std::abs(forward_shifted(t, c, r, x) - a), b.id);
    }
    detail::sort_roots(rs);
    return rs;
}

inline double forward_tt(double t1, double t2, double x) {
    return std::exp(x) * (x - t1) * (x - t2);
}

// critical structure of e^x (x - t1)(x - t2): always two stationary points
struct TtShape {
    double c1 = 0.0, c2 = 0.0;  // stationary abscissas, c1 < c2
    double M = 0.0, m = 0.0;    // local max f(c1) > 0 >= local min f(c2)
};

inline TtShape tt_shape(double t1, double t2) {
    if (!std::isfinite(t1) || !std::isfinite(t2))
        throw std::invalid_argument("tt_shape: non-finite input");
    double disc = std::sqrt((t1 - t2) * (t1 - t2) + 4.0);
    double c1 = 0.5 * (t1 + t2 - 2.0 - disc);
    double c2 = 0.5 * (t1 + t2 - 2.0 + disc);
    return {c1, c2, forward_tt(t1, t2, c1), forward_tt(t1, t2, c2)};
}

// number of distinct real solutions of e^x (x - t1)(x - t2) = a
inline int count_tt_solutions(double t1, double t2, double a) {
    if (!std::isfinite(a)) throw std::invalid_argument("count_tt_solutions: non-finite a");
    TtShape S = tt_shape(t1, t2);
    if (a > S.M) return 1;
    if (a == S.M) return 2;
    if (a == 0.0) return (t1 == t2) ? 1 : 2;
    if (a > 0.0) return 3;  // 0 < a < M
    if (a > S.m) return 2;  // m < a < 0
    if (a == S.m) return 1;
    return 0;
}

// all real solutions of e^x (x - t1)(x - t2) = a; tangential solutions are
// reported once with multiplicity 2; branch tags -2, -1, 0 name the left
// increasing, middle decreasing, and right increasing pieces
inline RootSet solve_tt(double t1, double t2, double a) {
    if (!std::isfinite(t1) || !std::isfinite(t2) || !std::isfinite(a))
        throw std::invalid_argument("solve_tt: non-finite input");
    TtShape S = tt_shape(t1, t2);
    auto f = [&](double x) { return forward_tt(t1, t2, x); };
    auto df = [&](double x) {
        return std::exp(x) * ((x - t1) * (x - t2) + (x - t1) + (x - t2));
    };
    const double nan = std::numeric_limits<double>::quiet_NaN();
    RootSet rs;
    if (a > 0.0 && a <= S.M) {  // left piece: increasing 0+ -> M on (-inf, c1]
        if (a == S.M) {
            detail::add_root(rs, S.c1, 0.0, -2);
        } else {
            double lo = S.c1 - 1.0;
            for (int i = 0; f(lo) > a; ++i) {
                lo = 2.0 * lo - S.c1;
                if (i > 400) throw std::runtime_error("solve_tt: bracket expansion failed");
            }
            auto rr = detail::solve_monotone(f, df, a, lo, S.c1, true, nan);
            detail::add_root(rs, rr.y, rr.residual, -2);
        }
    }
    if (a >= S.m && a <= S.M) {  // middle piece: decreasing M -> m on [c1, c2]
        if (a == S.M) {
            detail::add_root(rs, S.c1, 0.0, -1);
        } else if (a == S.m) {
            detail::add_root(rs, S.c2, 0.0, -1);
        } else {
            auto rr = detail::solve_monotone(f, df, a, S.c1, S.c2, false, nan);
            detail::add_root(rs, rr.y, rr.residual, -1);
        }
    }
    if (a >= S.m) {  // right piece: increasing m -> +inf on [c2, inf)
        if (a == S.m) {
            detail::add_root(rs, S.c2, 0.0, 0);
        } else {
            double hi = S.c2 + 1.0;
            for (int i = 0; f(hi) < a; ++i) {
                hi = 2.0 * hi - S.c2;
                if (i > 400) throw std::runtime_error("solve_tt: bracket expansion failed");
            }
            auto rr = detail::solve_monotone(f, df, a, S.c2, hi, true, nan);
            detail::add_root(rs, rr.y, rr.residual, 0);
        }
    }
    detail::sort_roots(rs);
    return rs;
}

// dispatcher over the supported shapes after canonicalization
inline RootSet solve(const GenWParams& input) {
    GenWParams p = canonicalize(input);
    std::size_t n = p.uppers.size(), m = p.lowers.size();
    RootSet rs;
    if (n == 0 && m == 0) {
        rs.roots.push_back({solve_empty(p.a), 0.0, 1, 0});
    } else if (n == 1 && m == 0) {
        rs = solve_shifted(p.uppers[0], 1.0, 0.0, p.a);
    } else if (n == 1 && m == 1) {
        rs = solve_ts(p.uppers[0], p.lowers[0], 1.0, p.a);
    } else if (n == 2 && m == 0) {
        rs = solve_tt(p.uppers[0], p.uppers[1], p.a);
    } else {
        throw std::invalid_argument(
            "solve: supported shapes after cancellation are (0,0), (1,0), (1,1), (2,0)");
    }
    for (auto& q : rs.roots) {
        q.x /= input.c;
        q.residual = std::abs(forward_general(input, q.x) - input.a);
    }
    // dividing by a negative c reverses the order the sub-solvers produce
    std::sort(rs.roots.begin(), rs.roots.end(),
              [](const Root& u, const Root& v) { return u.x < v.x; });
    return rs;
}

}  // namespace genlambert

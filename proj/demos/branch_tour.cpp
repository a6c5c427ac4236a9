// tour of the branch structure of W_r across the five parameter regimes
#include <cstdio>

#include <genlambert/genlambert.hpp>

using namespace genlambert;

static void show_layout(double r) {
    BranchLayout L = classify(r);
    std::printf("\nr = %-10g regime: %s\n", r, regime_name(L.regime));
    if (L.critical.alpha) std::printf("  alpha = %.15g\n", *L.critical.alpha);
    if (L.critical.beta) std::printf("  beta  = %.15g\n", *L.critical.beta);
    if (L.critical.gamma) std::printf("  gamma = %.15g\n", *L.critical.gamma);
    for (const auto& b : L.branches) {
        std::printf("  branch %2d: domain [%g, %g], range [%g, %g], %s\n", b.id, b.domain.lo,
                    b.domain.hi, b.range.lo, b.range.hi, b.increasing ? "increasing" : "decreasing");
    }
}

int main() {
    std::printf("W_r is the inverse of f_r(y) = y e^y + r y on a monotone piece.\n");

    for (double r : {0.0, 0.05, std::exp(-2.0), 0.4, -0.5}) show_layout(r);

    // every branch of the r = 0.05 family, evaluated mid-domain
    std::printf("\nr = 0.05, one point per branch:\n");
    BranchLayout L = classify(0.05);
    for (const auto& b : L.branches) {
        double x = std::isfinite(b.domain.lo)
                       ? (std::isfinite(b.domain.hi) ? 0.5 * (b.domain.lo + b.domain.hi)
                                                     : b.domain.lo + 1.0)
                       : b.domain.hi - 1.0;
        EvalResult er = w_r(0.05, b.id, x);
        std::printf("  W_%d(%.6g) = %.15g   residual %.1e, %d iterations\n", b.id, x, er.value,
                    er.residual, er.iterations);
    }

    // at r = e^{-2} the two folds merge: W has a vertical tangent with
    // cube-root growth on both sides
    double r = std::exp(-2.0);
    double xk = -4.0 * std::exp(-2.0);
    std::printf("\nr = e^-2: vertical tangent at x = %.15g, W = %.15g\n", xk, w_r(r, 0, xk).value);
    for (double h : {1e-3, 1e-6, 1e-9}) {
        double up = w_r(r, 0, xk + h).value;
        std::printf("  h = %-7.0e  (W(x+h) + 2) / h^(1/3) = %.6f\n", h, (up + 2.0) / std::cbrt(h));
    }

    // the omega-like constant of the r = 1 family: W_1(1), i.e. y e^y + y = 1
    std::printf("\nW_1(1) = %.17g\n", omega1_constant());

    // product form e^x (x - t1)(x - t2) = a: solution count depends on where a
    // sits relative to the local max M and local min m
    TtShape S = tt_shape(0.0, 1.0);
    std::printf("\ne^x x (x-1) = a has local max M = %.6f and local min m = %.6f\n", S.M, S.m);
    for (double a : {1.0, 0.5, 0.005, -0.2, -0.6}) {
        RootSet rs = solve_tt(0.0, 1.0, a);
        std::printf("  a = %-8g %d solution(s):", a, count_tt_solutions(0.0, 1.0, a));
        for (const auto& q : rs.roots) std::printf(" %.12g", q.x);
        std::printf("\n");
    }

    // ratio form through the dispatcher, with cancellation and rescaling
    GenWParams p;
    p.uppers = {0.0};
    p.lowers = {1.0};
    p.a = 0.01;
    std::printf("\ne^x x / (x-1) = 0.01:");
    for (const auto& q : solve(p).roots) std::printf(" x = %.15g (residual %.1e)", q.x, q.residual);
    std::printf("\n");
    return 0;
}

// Taylor expansions of the inverse functions and what their coefficients know
#include <cstdio>

#include <genlambert/genlambert.hpp>

using namespace genlambert;

int main() {
    // W_r at the origin; exact rational coefficients from the M polynomials
    std::printf("W_r(x) = sum c_n x^n near 0, exact coefficients:\n");
    for (double r : {0.0, 1.0}) {
        SeriesExpansion se = series_wr(r, 8);
        std::printf("  r = %g: ", r);
        for (int n = 1; n <= 8; ++n) std::printf("%s ", se.exact_coeffs[n - 1].get_str().c_str());
        std::printf("\n");
    }

    // the r = 0 coefficients are the classical (-n)^(n-1)/n!
    SeriesExpansion s0 = series_wr(0.0, 30);
    std::printf("\nr = 0 radius: exact %.15g, tail-ratio estimate %.15g\n", *s0.radius,
                estimate_radius(s0.coeffs));

    // summing the r = 1 series at x = 1 recovers W_1(1)
    SeriesExpansion s1 = series_wr(1.0, 60);
    std::printf("series sum at x = 1: %.17g vs direct %.17g\n", eval_series(s1, 1.0, 60).value,
                omega1_constant());

    // ratio form: W(t, s; a) about a = 0 through x = t
    SeriesExpansion sts = series_wts(0.0, 1.0, 40);
    double a = 0.01;
    double series_val = eval_series(sts, a, 40).value;
    RootSet rs = solve_ts(0.0, 1.0, 1.0, a);
    std::printf("\ne^x x/(x-1) = %.3g: series %.15g, solver roots", a, series_val);
    for (const auto& q : rs.roots) std::printf(" %.15g", q.x);
    std::printf("\n");

    // product form: W(t1, t2; a) about a = 0 through x = t1, built from
    // Bessel polynomials
    SeriesExpansion stt = series_wtt(0.0, 1.0, 40);
    for (double av : {0.001, 0.005}) {
        RootSet rt = solve_tt(0.0, 1.0, av);
        std::printf("e^x x(x-1) = %.3g: series %.15g, middle root %.15g\n", av,
                    eval_series(stt, av, 40).value, rt.roots[1].x);
    }

    // coefficient tail ratios estimate the distance to the nearest fold value
    // of the forward map, which caps the radius of convergence
    std::printf("\nradius estimates from 120-term tails:\n");
    for (double r : {-2.0, -0.5, 0.05}) {
        SeriesExpansion se = series_wr(r, 120);
        std::printf("  r = %-5g fold distance %.9f, estimate %.9f\n", r, *taylor_radius_bound(r),
                    estimate_radius(se.coeffs));
    }

    // warnings when evaluating too close to the radius
    EvalOutcome near_edge = eval_series(s0, 0.35, 30);
    std::printf("\neval at 0.35 (radius %.4f): value %.12g, slow convergence: %s\n", *s0.radius,
                near_edge.value, near_edge.slow_convergence ? "yes" : "no");
    return 0;
}

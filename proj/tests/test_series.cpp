#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <genlambert/combinatorics.hpp>
#include <genlambert/genw.hpp>
#include <genlambert/lambert_w.hpp>
#include <genlambert/rlambert.hpp>
#include <genlambert/series.hpp>

using namespace genlambert;

TEST_CASE("laguerre recurrence") {
    REQUIRE(laguerre(0, 1.0, 3.7) == 1.0);
    for (double x : {0.0, 0.5, -1.3})
        REQUIRE(std::abs(laguerre(2, 0.0, x) - (1.0 - 2.0 * x + 0.5 * x * x)) <= 1e-14);
    // alpha = 1 row via the derivative identity L_n^{(1)}(x) = -d/dx L_{n+1}(x)
    for (unsigned n : {3u, 7u}) {
        for (double x : {-2.0, -0.5, 1.2}) {
            double h = 1e-6;
            double fd = -(laguerre(n + 1, 0.0, x + h) - laguerre(n + 1, 0.0, x - h)) / (2.0 * h);
            REQUIRE(std::abs(fd - laguerre(n, 1.0, x)) <= 1e-6 * (1.0 + std::abs(fd)));
        }
    }
    // the exact rational instantiation agrees with the double one
    BigRat v = laguerre_g<BigRat>(5, BigRat(1), BigRat(-3));
    REQUIRE(std::abs(v.get_d() - laguerre(5, 1.0, -3.0)) <= 1e-12 * std::abs(v.get_d()));
}

TEST_CASE("bessel polynomials") {
    REQUIRE(bessel_poly(0, 1.7) == 1.0);
    REQUIRE(bessel_poly(1, 2.0) == 3.0);
    REQUIRE(bessel_poly(2, 1.0) == 7.0);
    REQUIRE(bessel_poly(3, 1.0) == 37.0);
    double z = -0.4;
    REQUIRE(std::abs(bessel_poly(3, z) - (1.0 + 6.0 * z + 15.0 * z * z + 15.0 * z * z * z)) <= 1e-13);
}

TEST_CASE("series_wr structure and exact coefficients") {
    SeriesExpansion se = series_wr(0.0, 20);
    REQUIRE(se.constant_term == 0.0);
    REQUIRE(se.branch_hint.has_value());
    REQUIRE(*se.branch_hint == 0);
    REQUIRE(se.radius.has_value());
    REQUIRE(std::abs(*se.radius - kInvE) <= 1e-16);
    for (int n = 1; n <= 20; ++n) {
        BigRat expect = BigRat(pow_int(BigInt(-n), static_cast<unsigned>(n - 1))) /
                        BigRat(factorial(static_cast<unsigned>(n)));
        REQUIRE(se.exact_coeffs[n - 1] == expect);
        REQUIRE(se.coeffs[n - 1] == expect.get_d());
    }

    REQUIRE(series_wr(BigRat(3), 1).exact_coeffs[0] == BigRat(1, 4));
    REQUIRE(*series_wr(-2.0, 5).branch_hint == -1);
    REQUIRE_THROWS_AS(series_wr(-1.0, 10), std::domain_error);
    REQUIRE_THROWS_AS(series_wr(0.5, 0), std::invalid_argument);

    // radius equals the distance to the nearest fold value of the forward map
    REQUIRE(std::abs(*series_wr(-2.0, 5).radius - 0.2043782739283114647) <= 1e-13);
    REQUIRE(std::abs(*series_wr(-0.5, 5).radius - 0.072383499035003914987) <= 1e-13);
    REQUIRE(std::abs(*series_wr(0.05, 5).radius - 0.4216440170774907362) <= 1e-12);
    REQUIRE(!series_wr(1.0, 5).radius.has_value());
}

TEST_CASE("series_wr evaluates to w_r near the origin") {
    for (double r : {-2.0, -0.5, 0.05, 0.5, 2.0}) {
        SeriesExpansion se = series_wr(r, 40);
        double rad = se.radius ? *se.radius : 0.5;
        int hint = *se.branch_hint;
        for (double frac : {0.1, 0.3}) {
            for (double sgn : {1.0, -1.0}) {
                double x = sgn * frac * rad;
                double direct = w_r(r, hint, x).value;
                REQUIRE(std::abs(eval_series(se, x, 40).value - direct) <=
                        1e-10 * std::max(1.0, std::abs(direct)));
            }
        }
    }
    // slope at zero is 1/(1+r) for every regime
    for (double r : {-3.0, -0.5, 0.05, 0.5, 2.0})
        REQUIRE(std::abs(series_wr(r, 1).coeffs[0] - 1.0 / (1.0 + r)) <= 1e-15 * std::abs(1.0 / (1.0 + r)));
}

TEST_CASE("forty terms at half radius agree with the solvers") {
    for (double r : {-2.0, -0.5, 0.05}) {
        SeriesExpansion se = series_wr(r, 40);
        double x0 = 0.5 * *se.radius;
        for (double x : {x0, -x0}) {
            double direct = w_r(r, *se.branch_hint, x).value;
            REQUIRE(std::abs(eval_series(se, x, 40).value - direct) <=
                    1e-9 * std::max(1.0, std::abs(direct)));
        }
    }
    SeriesExpansion st = series_wts(0.0, 1.0, 40);
    for (double a : {0.5 * *st.radius, -0.5 * *st.radius}) {
        double v = eval_series(st, a, 40).value;
        RootSet rs = solve_ts(0.0, 1.0, 1.0, a);
        double best = 1e300;
        for (const auto& q : rs.roots) best = std::min(best, std::abs(q.x - v));
        REQUIRE(best <= 1e-9);
    }
    TtShape S = tt_shape(0.0, 1.0);
    SeriesExpansion stt = series_wtt(0.0, 1.0, 40);
    for (double a : {-0.5 * S.m, 0.5 * S.m}) {
        double v = eval_series(stt, a, 40).value;
        RootSet rs = solve_tt(0.0, 1.0, a);
        double best = 1e300;
        for (const auto& q : rs.roots) best = std::min(best, std::abs(q.x - v));
        REQUIRE(best <= 1e-9);
    }
}

TEST_CASE("laguerre form equals the coefficient-table form") {
    // n! T L_{n-1}^{(1)}(n T) / n == sum_k a(n,k) (-1)^{k-1} T^k, exactly
    for (unsigned n = 1; n <= 12; ++n) {
        for (const BigRat& T : {BigRat(-1), BigRat(-1, 2), BigRat(2), BigRat(3, 7)}) {
            BigRat lhs = BigRat(factorial(n)) * T *
                         laguerre_g<BigRat>(n - 1, BigRat(1), BigRat(static_cast<long>(n)) * T) /
                         BigRat(static_cast<long>(n));
            BigRat rhs(0);
            BigRat Tp(1);
            for (unsigned k = 1; k <= n; ++k) {
                Tp *= T;
                BigRat term = BigRat(a_coefficient(n, k)) * Tp;
                if (k % 2 == 0) term = -term;
                rhs += term;
            }
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("series_wts values") {
    SeriesExpansion se = series_wts(0.0, 1.0, 40);
    REQUIRE(se.constant_term == 0.0);
    REQUIRE(std::abs(*se.radius - std::exp(-1.5)) <= 1e-16);
    REQUIRE(std::abs(se.coeffs[0] + 1.0) <= 1e-15);  // c_1 = (t - s) e^{-t}

    double v = eval_series(se, 0.01, 40).value;
    REQUIRE(std::abs(v + 0.010205683110943735031) <= 1e-12);
    RootSet rs = solve_ts(0.0, 1.0, 1.0, 0.01);
    double best = 1e300;
    for (const auto& q : rs.roots) best = std::min(best, std::abs(q.x - v));
    REQUIRE(best <= 1e-11);

    REQUIRE_THROWS_AS(series_wts(1.0, 1.0, 5), std::domain_error);
    REQUIRE_THROWS_AS(series_wts(0.0, 1.0, 0), std::invalid_argument);
    // coefficients overflow well before 500 terms here
    REQUIRE_THROWS_AS(series_wts(0.0, 1.0, 500), std::invalid_argument);
    // t > s: the nearest singularity is complex, no radius claim
    REQUIRE(!series_wts(1.0, 0.0, 5).radius.has_value());
    REQUIRE(series_wts(1.0, 0.0, 5).constant_term == 1.0);
}

TEST_CASE("series_wtt values") {
    SeriesExpansion se = series_wtt(0.0, 1.0, 40);
    REQUIRE(se.constant_term == 0.0);
    REQUIRE(std::abs(se.coeffs[0] + 1.0) <= 1e-15);  // c_1 = -e^{-t1}/(t2 - t1)

    REQUIRE(std::abs(eval_series(se, 0.001, 40).value + 0.00100000049966754047) <= 1e-13);
    REQUIRE(std::abs(eval_series(se, 0.005, 40).value + 0.0050000622943824815274) <= 1e-12);
    // swapping the roles expands the branch through the other root
    SeriesExpansion sw = series_wtt(1.0, 0.0, 40);
    REQUIRE(sw.constant_term == 1.0);
    REQUIRE(std::abs(eval_series(sw, 0.005, 40).value - 1.0018326706022245216) <= 1e-12);

    REQUIRE_THROWS_AS(series_wtt(0.5, 0.5, 5), std::domain_error);
    REQUIRE_THROWS_AS(series_wtt(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("radius estimation") {
    std::vector<double> geo;
    for (int n = 1; n <= 40; ++n) geo.push_back(std::pow(0.5, n));
    REQUIRE(std::abs(estimate_radius(geo) - 2.0) <= 1e-12);

    std::vector<double> too_short(19, 1.0);
    REQUIRE_THROWS_AS(estimate_radius(too_short), std::invalid_argument);
    std::vector<double> zero_tail(40, 0.0);
    REQUIRE_THROWS_AS(estimate_radius(zero_tail), std::domain_error);

    // the tail-ratio estimate approaches the fold distance with a small
    // positive bias that shrinks like 1.5/N
    for (double r : {-2.0, -0.5, 0.05}) {
        double fold = *taylor_radius_bound(r);
        double est = estimate_radius(series_wr(r, 120).coeffs);
        REQUIRE(std::abs(est - fold * (1.0 + 1.5 / 115.0)) <= 0.01 * fold);
    }
    double foldA = 0.20588085755961378548;  // |x e^x / (x-1)| at its negative stationary point
    double estA = estimate_radius(series_wts(0.0, 1.0, 300).coeffs);
    REQUIRE(std::abs(estA - foldA * (1.0 + 1.5 / 294.5)) <= 0.005 * foldA);

    // product form: nearest fold of e^x x (x-1) seen from 0 is the local minimum
    TtShape S = tt_shape(0.0, 1.0);
    double estT = estimate_radius(series_wtt(0.0, 1.0, 60).coeffs);
    REQUIRE(std::abs(estT - (-S.m)) <= 0.01 * (-S.m));
}

TEST_CASE("series evaluation flags slow convergence") {
    SeriesExpansion se = series_wr(0.0, 30);
    REQUIRE(!eval_series(se, 0.1, 30).slow_convergence);
    REQUIRE(eval_series(se, 0.35, 30).slow_convergence);
    REQUIRE(std::abs(eval_series(se, 0.1, 30).value - lambert_w(0, 0.1)) <= 1e-12);
    REQUIRE_THROWS_AS(eval_series(se, 0.1, 0), std::invalid_argument);

    double x = 0.2, direct = 0.0;
    for (int n = 1; n <= 30; ++n) direct += se.coeffs[n - 1] * std::pow(x, n);
    REQUIRE(std::abs(eval_series(se, x, 30).value - direct) <= 1e-14);
}

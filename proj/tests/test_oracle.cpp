#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include <genlambert/combinatorics.hpp>
#include <genlambert/genw.hpp>
#include <genlambert/oracle.hpp>
#include <genlambert/rlambert.hpp>
#include <genlambert/series.hpp>

using namespace genlambert;

TEST_CASE("partition census") {
    auto c4 = oracle::enumerate_partitions(4);
    REQUIRE(c4.at(1) == 1);
    REQUIRE(c4.at(2) == 7);
    REQUIRE(c4.at(3) == 6);
    REQUIRE(c4.at(4) == 1);
    REQUIRE_THROWS_AS(oracle::enumerate_partitions(11), std::invalid_argument);
}

TEST_CASE("barred arrangement census") {
    REQUIRE(oracle::enumerate_barred(1, 1) == 2);
    REQUIRE(oracle::enumerate_barred(3, 1) == 44);
    REQUIRE(oracle::enumerate_barred(0, 3) == 1);
    // zero bars reduces to ordered set partitions
    for (unsigned k = 1; k <= 6; ++k) REQUIRE(oracle::enumerate_barred(k, 0) == fubini(k));
    REQUIRE_THROWS_AS(oracle::enumerate_barred(8, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(oracle::enumerate_barred(2, 6), std::invalid_argument);
}

TEST_CASE("barred census matches the block-count formula") {
    // choose b blocks (b! S(k,b) ordered ways), then interleave the bars:
    // C(b + bars, bars) placements
    for (unsigned k = 1; k <= 6; ++k) {
        for (unsigned bars = 0; bars <= 3; ++bars) {
            BigInt s = 0;
            for (unsigned b = 0; b <= k; ++b)
                s += factorial(b) * stirling2(k, b) * binomial(b + bars, bars);
            REQUIRE(oracle::enumerate_barred(k, bars) == s);
        }
    }
}

TEST_CASE("high precision differentiation") {
    auto f = [](const Real256& w) { return exp(w); };
    for (unsigned m = 0; m <= 6; ++m) {
        double d = oracle::highprec_derivative(f, m, Real256(0.0)).to_double();
        REQUIRE(std::abs(d - 1.0) <= 1e-12);
    }
    auto g = [](const Real256& w) { return w * w * w; };
    REQUIRE(std::abs(oracle::highprec_derivative(g, 2, Real256(2.0)).to_double() - 12.0) <= 1e-12);
    auto h = [](const Real256& w) { return exp(w * Real256(3)); };
    REQUIRE(std::abs(oracle::highprec_derivative(h, 4, Real256(0.0)).to_double() - 81.0) <= 1e-9);
}

TEST_CASE("lagrange coefficient oracle") {
    for (double r : {0.0, 1.0, -0.5, 2.0})
        REQUIRE(std::abs(oracle::lagrange_coefficient_oracle(r, 1) - 1.0 / (1.0 + r)) <= 1e-12);

    // r = 0 collapses to the classical coefficients (-n)^{n-1} / n!
    for (unsigned n = 1; n <= 8; ++n) {
        BigRat er = BigRat(pow_int(BigInt(-static_cast<long>(n)), n - 1)) / BigRat(factorial(n));
        double expect = er.get_d();
        REQUIRE(std::abs(oracle::lagrange_coefficient_oracle(0.0, n) - expect) <= 1e-8 * std::abs(expect));
    }

    // general r against the closed-form series coefficients; the absolute
    // floor covers coefficients that vanish exactly (r = 3, n = 3)
    for (double r : {-2.0, -0.5, 0.5, 1.0, 3.0}) {
        SeriesExpansion se = series_wr(r, 8);
        for (unsigned n = 1; n <= 8; ++n) {
            double c = se.coeffs[n - 1];
            REQUIRE(std::abs(oracle::lagrange_coefficient_oracle(r, n) - c) <=
                    1e-8 * std::abs(c) + 1e-15);
        }
    }

    REQUIRE_THROWS_AS(oracle::lagrange_coefficient_oracle(-1.0 + 1e-8, 2), std::domain_error);
    REQUIRE_THROWS_AS(oracle::lagrange_coefficient_oracle(0.0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(oracle::lagrange_coefficient_oracle(0.0, 9), std::invalid_argument);
}

TEST_CASE("adaptive quadrature") {
    REQUIRE(std::abs(oracle::quadrature([](double x) { return x * x; }, 0.0, 1.0, 1e-12) - 1.0 / 3.0) <= 1e-11);
    REQUIRE(std::abs(oracle::quadrature([](double x) { return std::sin(x); }, 0.0, 3.141592653589793, 1e-11) - 2.0) <= 1e-9);
    REQUIRE(oracle::quadrature([](double x) { return x; }, 2.0, 2.0, 1e-10) == 0.0);
    REQUIRE(std::abs(oracle::quadrature([](double x) { return x; }, 1.0, 0.0, 1e-12) + 0.5) <= 1e-11);
    // a jump at an irrational point keeps the Simpson mismatch proportional to
    // the interval width, so an absurd tolerance must exhaust the depth budget
    REQUIRE_THROWS_AS(
        oracle::quadrature([](double x) { return x < 0.5773502691896258 ? 0.0 : 1.0; }, 0.0, 1.0,
                           1e-18),
        std::runtime_error);
    REQUIRE_THROWS_AS(oracle::quadrature([](double x) { return x; }, 0.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("bell numbers") {
    const long b[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (unsigned n = 0; n <= 10; ++n) REQUIRE(oracle::bell_exact(n) == b[n]);
    REQUIRE(oracle::bell_exact(20) == BigInt("51724158235372"));
    REQUIRE_THROWS_AS(oracle::log_bigint(BigInt(0)), std::domain_error);
    REQUIRE(std::abs(oracle::log_bigint(BigInt(1024)) - 10.0 * std::log(2.0)) <= 1e-12);
}

TEST_CASE("bell log approximation improves with n") {
    REQUIRE_THROWS_AS(oracle::bell_lovasz(1), std::invalid_argument);
    double prev = 1e300;
    for (unsigned n : {25u, 50u, 100u, 200u}) {
        double exact = oracle::log_bigint(oracle::bell_exact(n));
        double rel = std::abs(oracle::bell_lovasz(n) - exact) / exact;
        REQUIRE(rel < prev);
        prev = rel;
    }
    REQUIRE(prev <= 0.002);
}

TEST_CASE("double results certified at 256 bits") {
    oracle::ForwardParams pw;
    for (int i = 0; i <= 99; ++i) {
        double x = std::pow(10.0, -6.0 + 12.0 * i / 99.0);
        double w = lambert_w(0, x);
        REQUIRE(std::abs(oracle::highprec_residual(oracle::ForwardMap::classic_w, pw, x, w)) <= 1e-14 * x);
    }

    for (double r : {-3.0, -0.5, 0.05, std::exp(-2.0), 0.5, 2.0}) {
        BranchLayout layout = classify(r);
        for (const auto& b : layout.branches) {
            double lo = std::isfinite(b.domain.lo) ? b.domain.lo + std::max(0.02, 0.02 * std::abs(b.domain.lo)) : -20.0;
            double hi = std::isfinite(b.domain.hi) ? b.domain.hi - std::max(0.02, 0.02 * std::abs(b.domain.hi)) : 20.0;
            if (!(hi > lo)) continue;
            for (int i = 0; i <= 99; ++i) {
                double x = lo + (hi - lo) * i / 99.0;
                EvalResult er = w_r(r, b.id, x);
                oracle::ForwardParams p;
                p.r = r;
                double res = std::abs(oracle::highprec_residual(oracle::ForwardMap::r_lambert, p, x, er.value));
                REQUIRE(res <= 1e-12 * std::max(1.0, std::abs(x)));
            }
        }
    }
}

TEST_CASE("generalized solves certified at 256 bits") {
    for (double a : {0.01, -0.2, 0.25}) {
        RootSet rs = solve_ts(0.3, 1.1, 1.0, a);
        REQUIRE(!rs.roots.empty());
        for (const auto& q : rs.roots) {
            oracle::ForwardParams p;
            p.t = 0.3;
            p.s = 1.1;
            p.c = 1.0;
            REQUIRE(std::abs(oracle::highprec_residual(oracle::ForwardMap::gen_ts, p, a, q.x)) <=
                    1e-10 * std::max(1.0, std::abs(a)));
        }
        RootSet rt = solve_tt(-0.4, 0.9, a);
        for (const auto& q : rt.roots) {
            oracle::ForwardParams p;
            p.t1 = -0.4;
            p.t2 = 0.9;
            REQUIRE(std::abs(oracle::highprec_residual(oracle::ForwardMap::gen_tt, p, a, q.x)) <=
                    1e-10 * std::max(1.0, std::abs(a)));
        }
    }
    oracle::ForwardParams p;
    p.t = 0.0;
    p.s = 1.0;
    p.c = 1.0;
    REQUIRE_THROWS_AS(oracle::highprec_residual(oracle::ForwardMap::gen_ts, p, 0.5, 1.0), std::domain_error);
}

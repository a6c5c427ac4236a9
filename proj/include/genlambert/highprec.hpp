#pragma once

#include <mpfr.h>

#include "exact.hpp"

namespace genlambert {

// fixed-precision (256-bit) real with value semantics; used on the oracle
// side to certify double-precision results
class Real256 {
  public:
    static constexpr mpfr_prec_t kBits = 256;

    Real256() { mpfr_init2(v_, kBits); mpfr_set_zero(v_, 1); }
    Real256(double d) { mpfr_init2(v_, kBits); mpfr_set_d(v_, d, MPFR_RNDN); }
    Real256(int i) { mpfr_init2(v_, kBits); mpfr_set_si(v_, i, MPFR_RNDN); }
    Real256(long i) { mpfr_init2(v_, kBits); mpfr_set_si(v_, i, MPFR_RNDN); }
    Real256(unsigned long u) { mpfr_init2(v_, kBits); mpfr_set_ui(v_, u, MPFR_RNDN); }
    explicit Real256(const BigInt& z) { mpfr_init2(v_, kBits); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    explicit Real256(const BigRat& q) { mpfr_init2(v_, kBits); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    Real256(const Real256& o) { mpfr_init2(v_, kBits); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real256(Real256&& o) noexcept { mpfr_init2(v_, kBits); mpfr_swap(v_, o.v_); }
    Real256& operator=(Real256 o) {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real256() { mpfr_clear(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // exact round-to-nearest integer; to_double would lose bits past 2^53
    BigInt round_to_int() const {
        BigInt z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }

    Real256& operator+=(const Real256& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real256& operator-=(const Real256& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real256& operator*=(const Real256& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real256& operator/=(const Real256& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend Real256 operator+(Real256 a, const Real256& b) { return a += b; }
    friend Real256 operator-(Real256 a, const Real256& b) { return a -= b; }
    friend Real256 operator*(Real256 a, const Real256& b) { return a *= b; }
    friend Real256 operator/(Real256 a, const Real256& b) { return a /= b; }
    friend Real256 operator-(const Real256& a) {
        Real256 r;
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real256& a, const Real256& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real256& a, const Real256& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real256& a, const Real256& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real256& a, const Real256& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real256& a, const Real256& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend Real256 exp(const Real256& a) {
        Real256 r;
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real256 log(const Real256& a) {
        Real256 r;
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real256 sqrt(const Real256& a) {
        Real256 r;
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real256 abs(const Real256& a) {
        Real256 r;
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real256 pow_ui(const Real256& a, unsigned long e) {
        Real256 r;
        mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

  private:
    mpfr_t v_;
};

}  // namespace genlambert

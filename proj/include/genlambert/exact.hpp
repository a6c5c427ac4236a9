#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

namespace genlambert {

using BigInt = mpz_class;  // arbitrary-precision signed integer
using BigRat = mpq_class;  // exact rational, kept in canonical form by GMP

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigRat pow_rat(const BigRat& base, unsigned long e) {
    BigRat r(1);
    BigRat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// exact: every finite double is a dyadic rational
inline BigRat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite value");
    return BigRat(x);
}

}  // namespace genlambert

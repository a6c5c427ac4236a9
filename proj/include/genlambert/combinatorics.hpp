#pragma once

#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace genlambert {

// Stirling number of the second kind S(n, k); rows memoized, returned by value
inline BigInt stirling2(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    static std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        unsigned m = static_cast<unsigned>(rows.size());
        std::vector<BigInt> row(m + 1);
        row[0] = 0;
        row[m] = 1;
        for (unsigned j = 1; j < m; ++j) row[j] = BigInt(j) * prev[j] + prev[j - 1];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

template <class T>
T rising_factorial(T x, unsigned k) {
    T acc(1);
    for (unsigned i = 0; i < k; ++i) {
        acc *= x;
        x += 1;
    }
    return acc;
}

template <class T>
T falling_factorial(T x, unsigned k) {
    T acc(1);
    for (unsigned i = 0; i < k; ++i) {
        acc *= x;
        x -= 1;
    }
    return acc;
}

// A(n, k) = (n-1)! n^(k-1) C(n, k) / (k-1)!, defined for 1 <= k <= n
inline BigInt a_coefficient(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw std::domain_error("a_coefficient: need 1 <= k <= n");
    BigInt num = factorial(n - 1) * pow_int(BigInt(n), k - 1) * binomial(n, k);
    BigInt r;
    BigInt den = factorial(k - 1);
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

// C(i, k) for parameter n: (-1)^i * n^(rising i) * S(k, i), for 1 <= i <= k
inline BigInt c_coefficient(unsigned n, unsigned i, unsigned k) {
    if (n < 1) throw std::domain_error("c_coefficient: need n >= 1");
    if (i < 1 || i > k) throw std::domain_error("c_coefficient: need 1 <= i <= k");
    BigInt v = rising_factorial(BigInt(n), i) * stirling2(k, i);
    if (i % 2) v = -v;
    return v;
}

struct CoeffTriangle {
    enum class Kind { a_table, c_table };
    Kind kind = Kind::a_table;
    unsigned n_param = 0;  // meaningful for c_table only
    // a_table: rows[n-1] holds k = 1..n; c_table: rows[k-1] holds i = 1..k
    std::vector<std::vector<BigInt>> rows;
};

inline CoeffTriangle a_triangle(unsigned n_max) {
    if (n_max < 1) throw std::domain_error("a_triangle: need n_max >= 1");
    CoeffTriangle t;
    t.kind = CoeffTriangle::Kind::a_table;
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row;
        row.reserve(n);
        for (unsigned k = 1; k <= n; ++k) row.push_back(a_coefficient(n, k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

// builds rows k = 1..k_max from the seed C(1,1) = -n and the two-term
// recurrence C(i, k+1) = i C(i, k) - (n+i-1) C(i-1, k); no closed form used
inline CoeffTriangle c_triangle_by_recurrence(unsigned n, unsigned k_max) {
    if (n < 1) throw std::domain_error("c_triangle_by_recurrence: need n >= 1");
    if (k_max < 1) throw std::domain_error("c_triangle_by_recurrence: need k_max >= 1");
    CoeffTriangle t;
    t.kind = CoeffTriangle::Kind::c_table;
    t.n_param = n;
    t.rows.push_back({BigInt(-static_cast<long>(n))});
    for (unsigned k = 1; k < k_max; ++k) {
        const auto& prev = t.rows.back();  // entries i = 1..k
        std::vector<BigInt> row(k + 1);
        for (unsigned i = 1; i <= k + 1; ++i) {
            BigInt v(0);
            if (i <= k) v += BigInt(i) * prev[i - 1];
            if (i >= 2) v -= BigInt(n + i - 1) * prev[i - 2];
            row[i - 1] = std::move(v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// M_k polynomial for parameter n: sum_{i=1}^{k} C(i, k) y^i
struct MPolynomial {
    unsigned n = 0;
    unsigned k = 0;
    std::vector<BigInt> coeffs;  // coeffs[i-1] multiplies y^i
};

inline MPolynomial m_polynomial(unsigned n, unsigned k) {
    if (n < 1 || k < 1) throw std::domain_error("m_polynomial: need n >= 1 and k >= 1");
    MPolynomial p;
    p.n = n;
    p.k = k;
    p.coeffs.reserve(k);
    for (unsigned i = 1; i <= k; ++i) p.coeffs.push_back(c_coefficient(n, i, k));
    return p;
}

inline BigRat m_eval(const MPolynomial& p, const BigRat& y) {
    BigRat acc(0);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = (acc + BigRat(*it)) * y;
    return acc;
}

inline double m_eval(const MPolynomial& p, double y) {
    double acc = 0.0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = (acc + it->get_d()) * y;
    return acc;
}

// ordered set partitions of [k], i.e. sum_i i! S(k, i)
inline BigInt fubini(unsigned k) {
    BigInt s(0);
    for (unsigned i = 0; i <= k; ++i) s += factorial(i) * stirling2(k, i);
    return s;
}

}  // namespace genlambert

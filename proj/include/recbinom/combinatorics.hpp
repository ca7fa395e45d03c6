#ifndef RECBINOM_COMBINATORICS_HPP
#define RECBINOM_COMBINATORICS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "recbinom/rational.hpp"

namespace recbinom {

inline BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

/// C(n, k); zero outside 0 <= k <= n so summation loops need no boundary guards.
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact at every step
    }
    return result;
}

/// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned k) {
    Rational result = 1;
    Rational term = a;
    for (unsigned i = 0; i < k; ++i) {
        result *= term;
        term += 1;
    }
    return result;
}

/// Integer power with the convention 0^0 = 1.
inline BigInt ipow(const BigInt& base, unsigned exponent) {
    BigInt result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

/// Integral of t^m (1-t)^n over [0,1], i.e. m! n! / (m+n+1)!.
inline Rational beta_int(unsigned m, unsigned n) {
    return Rational(factorial(m) * factorial(n), factorial(m + n + 1));
}

/// Reciprocal of C(b+k, c) computed through the Beta integral:
/// (b+k+1) * beta_int(c, b+k-c).
inline Rational inverse_binomial_via_beta(unsigned b, unsigned c, unsigned k) {
    if (c == 0 || b < c) throw std::invalid_argument("inverse_binomial_via_beta: requires b >= c > 0");
    return Rational(b + k + 1) * beta_int(c, b + k - c);
}

/// Stirling numbers of the second kind S(m, 0..m), by the recurrence
/// S(m, r) = r*S(m-1, r) + S(m-1, r-1).
inline std::vector<BigInt> stirling2_row(unsigned m) {
    std::vector<BigInt> row{1};
    for (unsigned i = 1; i <= m; ++i) {
        std::vector<BigInt> next(i + 1, 0);
        for (unsigned r = 0; r <= i; ++r) {
            if (r < row.size()) next[r] += BigInt(r) * row[r];
            if (r >= 1 && r - 1 < row.size()) next[r] += row[r - 1];
        }
        row = std::move(next);
    }
    return row;
}

/// The triple (n, b, c) with the standing hypothesis b >= c > 0, n >= 0.
struct SumParams {
    int n = 0;
    int b = 1;
    int c = 1;

    static SumParams make(long long n, long long b, long long c) {
        if (n < 0) throw std::invalid_argument("invalid parameters: n must satisfy n >= 0 (got n=" +
                                               std::to_string(n) + ")");
        if (c <= 0) throw std::invalid_argument("invalid parameters: c must satisfy c > 0 (got c=" +
                                                std::to_string(c) + ")");
        if (b < c) throw std::invalid_argument("invalid parameters: b must satisfy b >= c (got b=" +
                                               std::to_string(b) + ", c=" + std::to_string(c) + ")");
        return SumParams{static_cast<int>(n), static_cast<int>(b), static_cast<int>(c)};
    }

    friend bool operator==(const SumParams&, const SumParams&) = default;
};

}  // namespace recbinom

#endif  // RECBINOM_COMBINATORICS_HPP

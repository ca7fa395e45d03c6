#ifndef RECBINOM_SUMS_HPP
#define RECBINOM_SUMS_HPP

#include <cstddef>
#include <vector>

#include "recbinom/combinatorics.hpp"
#include "recbinom/rational.hpp"

namespace recbinom {

/// Dense coefficient list of S_n(b,c;x) as a polynomial in x:
/// coefficient k is (-1)^k C(n,k) / C(b+k,c), k = 0..n.
struct SumPolynomial {
    std::vector<Rational> coefficients;

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = coefficients.size(); i-- > 0;) {
            acc = acc * x + coefficients[i];
        }
        return acc;
    }
};

/// The k-th term (-1)^k C(n,k) x^k / C(b+k,c) of the parametric sum.
inline Rational parametric_term(const SumParams& p, const Rational& x, unsigned k) {
    Rational term(binomial(p.n, k), binomial(p.b + k, p.c));
    if (k % 2 == 1) term = -term;
    return term * pow(x, k);
}

inline Rational direct_parametric(const SumParams& p, const Rational& x) {
    Rational sum = 0;
    for (int k = 0; k <= p.n; ++k) sum += parametric_term(p, x, k);
    return sum;
}

inline Rational direct_sum(const SumParams& p) {
    return direct_parametric(p, 1);
}

/// T_n^(m): weight k^m per term, with 0^0 = 1 so m = 0 reduces to the parametric sum.
inline Rational direct_weighted(const SumParams& p, const Rational& x, unsigned m) {
    Rational sum = 0;
    for (int k = 0; k <= p.n; ++k) {
        sum += Rational(ipow(k, m)) * parametric_term(p, x, k);
    }
    return sum;
}

/// Lifted sum: every term divided by (k+1)^m.
inline Rational direct_lifted(const SumParams& p, const Rational& x, unsigned m) {
    Rational sum = 0;
    for (int k = 0; k <= p.n; ++k) {
        sum += parametric_term(p, x, k) / Rational(ipow(k + 1, m));
    }
    return sum;
}

inline SumPolynomial polynomial_coeffs(const SumParams& p) {
    SumPolynomial poly;
    poly.coefficients.reserve(p.n + 1);
    for (int k = 0; k <= p.n; ++k) poly.coefficients.push_back(parametric_term(p, 1, k));
    return poly;
}

/// (x d/dx)^m on a power series multiplies coefficient k by k^m.
inline SumPolynomial apply_x_ddx(SumPolynomial poly, unsigned m) {
    for (std::size_t k = 0; k < poly.coefficients.size(); ++k) {
        poly.coefficients[k] *= Rational(ipow(k, m));
    }
    return poly;
}

}  // namespace recbinom

#endif  // RECBINOM_SUMS_HPP

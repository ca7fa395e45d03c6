#ifndef RECBINOM_CLOSED_FORMS_HPP
#define RECBINOM_CLOSED_FORMS_HPP

#include <optional>
#include <vector>

#include "recbinom/combinatorics.hpp"
#include "recbinom/hypergeometric.hpp"
#include "recbinom/rational.hpp"

namespace recbinom {

/// Frisch closed form: S_n(b,c) = (c/(n+c)) / C(n+b, b-c).
inline Rational frisch(const SumParams& p) {
    return Rational(p.c, p.n + p.c) / Rational(binomial(p.n + p.b, p.b - p.c));
}

/// Two-term Beta-hypergeometric representation of the parametric sum:
///   S_n(b,c;x) = prefactor1 * 2F1(-n, b-c+1; b+2; x)
///              - prefactor2 * x * 2F1(1-n, b-c+2; b+3; x)
/// with prefactor1 = (b+1) B(b-c+1, c+1) and prefactor2 = n B(b-c+2, c+1).
/// The second term carries the factor n, so the series is absent at n = 0
/// (its upper parameter 1-n would not terminate there).
struct Decomposition {
    Rational prefactor1;
    HypSeries series1;
    Rational prefactor2;
    std::optional<HypSeries> series2;
    int x_power2 = 1;  // explicit power of x on the second term
};

inline Decomposition beta_decomposition(const SumParams& p) {
    // B(b-c+1, c+1) = beta_int(b-c, c), B(b-c+2, c+1) = beta_int(b-c+1, c).
    Rational prefactor1 = Rational(p.b + 1) * beta_int(p.b - p.c, p.c);
    HypSeries series1 = HypSeries::make({Rational(-p.n), Rational(p.b - p.c + 1)},
                                        {Rational(p.b + 2)}, Rational(1));
    Rational prefactor2 = Rational(p.n) * beta_int(p.b - p.c + 1, p.c);
    std::optional<HypSeries> series2;
    if (p.n >= 1) {
        series2 = HypSeries::make({Rational(1 - p.n), Rational(p.b - p.c + 2)},
                                  {Rational(p.b + 3)}, Rational(1));
    }
    return Decomposition{std::move(prefactor1), std::move(series1), std::move(prefactor2),
                         std::move(series2), 1};
}

inline Rational eval_decomposition(const SumParams& p, const Rational& x) {
    const Decomposition dec = beta_decomposition(p);
    Rational value = dec.prefactor1 * eval_terminating(dec.series1.with_argument(x));
    if (dec.series2) {
        value -= dec.prefactor2 * x * eval_terminating(dec.series2->with_argument(x));
    }
    return value;
}

/// (x d/dx)^m of the decomposition, expanded through Stirling numbers of the
/// second kind: (x d/dx)^m = sum_r S2(m,r) x^r d^r/dx^r. The explicit x factor
/// on the second term contributes the Leibniz pair
/// d^r/dx^r [x F(x)] = x F^(r)(x) + r F^(r-1)(x).
inline Rational weighted_closed(const SumParams& p, const Rational& x, unsigned m) {
    const Decomposition dec = beta_decomposition(p);
    const std::vector<BigInt> stirling = stirling2_row(m);

    auto shifted_value = [&](const HypSeries& series, unsigned r) {
        const DerivativeShift shift = derivative_shift(series, r);
        if (shift.coefficient.is_zero()) return Rational(0);
        return shift.coefficient * eval_terminating(shift.series->with_argument(x));
    };

    Rational total = 0;
    for (unsigned r = 0; r < stirling.size(); ++r) {
        if (stirling[r] == 0) continue;
        Rational bracket = dec.prefactor1 * shifted_value(dec.series1, r);
        if (dec.series2) {
            Rational second = x * shifted_value(*dec.series2, r);
            if (r >= 1) second += Rational(r) * shifted_value(*dec.series2, r - 1);
            bracket -= dec.prefactor2 * second;
        }
        total += Rational(stirling[r]) * pow(x, r) * bracket;
    }
    return total;
}

/// Lift of the decomposition: term k of the first series gains 1/(k+1)^m
/// (shift 1), while the second series sits under an explicit x*u factor, so its
/// term k gains 1/(k+2)^m (shift 2, overall coefficient 2^-m).
inline Rational lifted_closed(const SumParams& p, const Rational& x, unsigned m) {
    const Decomposition dec = beta_decomposition(p);
    const HarmonicLift lift1 = lift_insert_harmonic(dec.series1.with_argument(x), 1, m);
    Rational value = dec.prefactor1 * lift1.coefficient * eval_terminating(lift1.series);
    if (dec.series2) {
        const HarmonicLift lift2 = lift_insert_harmonic(dec.series2->with_argument(x), 2, m);
        value -= dec.prefactor2 * x * lift2.coefficient * eval_terminating(lift2.series);
    }
    return value;
}

}  // namespace recbinom

#endif  // RECBINOM_CLOSED_FORMS_HPP

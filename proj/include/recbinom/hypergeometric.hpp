#ifndef RECBINOM_HYPERGEOMETRIC_HPP
#define RECBINOM_HYPERGEOMETRIC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "recbinom/combinatorics.hpp"
#include "recbinom/rational.hpp"

namespace recbinom {

struct InvalidSeriesError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A terminating generalized hypergeometric series pFq(upper; lower; argument).
/// Some upper parameter must be a non-positive integer -N; the series is then the
/// polynomial sum of terms k = 0..N. Parameter lists keep insertion order.
class HypSeries {
public:
    static HypSeries make(std::vector<Rational> upper, std::vector<Rational> lower,
                          Rational argument) {
        const auto truncation = termination_index(upper);
        if (!truncation)
            throw InvalidSeriesError("series does not terminate: no non-positive-integer upper parameter");
        for (const Rational& l : lower) {
            if (l.is_integer() && l.sign() <= 0 && -l.num() <= *truncation)
                throw InvalidSeriesError("lower parameter " + l.str() +
                                         " vanishes within the summation range");
        }
        return HypSeries(std::move(upper), std::move(lower), std::move(argument), *truncation);
    }

    const std::vector<Rational>& upper() const { return upper_; }
    const std::vector<Rational>& lower() const { return lower_; }
    const Rational& argument() const { return argument_; }
    unsigned truncation() const { return truncation_; }

    HypSeries with_argument(Rational x) const {
        HypSeries copy(*this);
        copy.argument_ = std::move(x);
        return copy;
    }

    /// {"upper": ["-3","5/2"], "lower": ["4","2"], "x": "1/2"}
    std::string to_json() const {
        auto list = [](const std::vector<Rational>& params) {
            std::string out = "[";
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (i > 0) out += ',';
                out += '"' + params[i].str() + '"';
            }
            return out + "]";
        };
        return "{\"upper\":" + list(upper_) + ",\"lower\":" + list(lower_) +
               ",\"x\":\"" + argument_.str() + "\"}";
    }

    /// Smallest N with a non-positive-integer upper parameter -N, if any.
    static std::optional<unsigned> termination_index(const std::vector<Rational>& upper) {
        std::optional<unsigned> best;
        for (const Rational& a : upper) {
            if (!a.is_integer() || a.sign() > 0) continue;
            const auto n = static_cast<unsigned>(BigInt(-a.num()).convert_to<unsigned long long>());
            if (!best || n < *best) best = n;
        }
        return best;
    }

private:
    HypSeries(std::vector<Rational> upper, std::vector<Rational> lower, Rational argument,
              unsigned truncation)
        : upper_(std::move(upper)), lower_(std::move(lower)), argument_(std::move(argument)),
          truncation_(truncation) {}

    std::vector<Rational> upper_;
    std::vector<Rational> lower_;
    Rational argument_;
    unsigned truncation_ = 0;
};

/// Exact value of a terminating series, by the iterative term ratio
/// t_{k+1} = t_k * prod(upper_i + k) / prod(lower_j + k) * x / (k+1).
inline Rational eval_terminating(const HypSeries& series) {
    Rational term = 1;
    Rational sum = 1;
    for (unsigned k = 0; k < series.truncation(); ++k) {
        for (const Rational& a : series.upper()) term *= a + k;
        for (const Rational& l : series.lower()) {
            const Rational shifted = l + k;
            if (shifted.is_zero())
                throw InvalidSeriesError("lower parameter " + l.str() + " hits zero at k=" +
                                         std::to_string(k));
            term /= shifted;
        }
        term *= series.argument();
        term /= k + 1;
        sum += term;
    }
    return sum;
}

struct DerivativeShift {
    Rational coefficient;
    std::optional<HypSeries> series;  // absent only when coefficient == 0 kills termination
};

/// r-th derivative of a Gauss-type series: every parameter shifts by r and the
/// whole series picks up prod(upper_i)_r / prod(lower_j)_r. When r exceeds the
/// truncation index the coefficient vanishes and the shifted series (which would
/// no longer terminate) is dropped.
inline DerivativeShift derivative_shift(const HypSeries& series, unsigned r) {
    Rational coefficient = 1;
    for (const Rational& a : series.upper()) coefficient *= pochhammer(a, r);
    for (const Rational& l : series.lower()) coefficient /= pochhammer(l, r);

    std::vector<Rational> upper, lower;
    upper.reserve(series.upper().size());
    lower.reserve(series.lower().size());
    for (const Rational& a : series.upper()) upper.push_back(a + r);
    for (const Rational& l : series.lower()) lower.push_back(l + r);

    if (!HypSeries::termination_index(upper)) {
        return DerivativeShift{std::move(coefficient), std::nullopt};
    }
    return DerivativeShift{std::move(coefficient),
                           HypSeries::make(std::move(upper), std::move(lower), series.argument())};
}

struct HarmonicLift {
    Rational coefficient;
    HypSeries series;
};

/// Multiplies term k by 1/(k+shift)^m via the identity
/// 1/(k+s) = (1/s) * (s)_k / (s+1)_k: appends m copies of upper parameter s and
/// m copies of lower parameter s+1, with overall coefficient s^-m.
inline HarmonicLift lift_insert_harmonic(const HypSeries& series, unsigned shift, unsigned m) {
    if (shift == 0) throw std::invalid_argument("lift_insert_harmonic: shift must be >= 1");
    std::vector<Rational> upper = series.upper();
    std::vector<Rational> lower = series.lower();
    for (unsigned i = 0; i < m; ++i) {
        upper.emplace_back(shift);
        lower.emplace_back(shift + 1);
    }
    return HarmonicLift{pow(Rational(1, shift), static_cast<long long>(m)),
                        HypSeries::make(std::move(upper), std::move(lower), series.argument())};
}

}  // namespace recbinom

#endif  // RECBINOM_HYPERGEOMETRIC_HPP

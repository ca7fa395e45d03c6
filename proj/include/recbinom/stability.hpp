#ifndef RECBINOM_STABILITY_HPP
#define RECBINOM_STABILITY_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "recbinom/closed_forms.hpp"
#include "recbinom/combinatorics.hpp"
#include "recbinom/rational.hpp"
#include "recbinom/sums.hpp"

namespace recbinom {

struct ConditionedSum {
    double value;
    std::optional<Rational> condition;  // sum(|t_k|) / |sum(t_k)|; absent when the exact sum is 0
};

/// Naive binary64 summation in ascending index order. Each term is the exact
/// rational term rounded once, so the float error isolates summation
/// cancellation; the condition number is computed entirely in rational
/// arithmetic.
inline ConditionedSum float_direct_conditioned(const SumParams& p, const Rational& x) {
    Rational exact_sum = 0;
    Rational abs_sum = 0;
    double value = 0.0;
    for (int k = 0; k <= p.n; ++k) {
        const Rational term = parametric_term(p, x, k);
        exact_sum += term;
        abs_sum += abs(term);
        value += term.to_double();
    }
    std::optional<Rational> condition;
    if (!exact_sum.is_zero()) condition = abs_sum / abs(exact_sum);
    return ConditionedSum{value, std::move(condition)};
}

/// Neumaier-compensated variant over the same rounded terms; reported for
/// contrast only.
inline double float_direct_compensated(const SumParams& p, const Rational& x) {
    double sum = 0.0;
    double compensation = 0.0;
    for (int k = 0; k <= p.n; ++k) {
        const double term = parametric_term(p, x, k).to_double();
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            compensation += (sum - t) + term;
        } else {
            compensation += (term - t) + sum;
        }
        sum = t;
    }
    return sum + compensation;
}

struct StabilityReport {
    SumParams params;
    Rational x;
    Rational exact;
    double float_direct = 0.0;
    double float_compensated = 0.0;
    double float_closed = 0.0;
    bool exact_is_zero = false;
    double relerr_direct = 0.0;  // absolute errors when exact_is_zero
    double relerr_closed = 0.0;
    std::optional<Rational> condition;
};

/// Compares the naive float path against the closed form (frisch at x = 1,
/// the Beta-hypergeometric decomposition otherwise), both measured against the
/// exact rational value. Errors are computed exactly and rounded once.
inline StabilityReport stability_report(const SumParams& p, const Rational& x) {
    StabilityReport report;
    report.params = p;
    report.x = x;
    report.exact = direct_parametric(p, x);

    ConditionedSum direct = float_direct_conditioned(p, x);
    report.float_direct = direct.value;
    report.condition = std::move(direct.condition);
    report.float_compensated = float_direct_compensated(p, x);

    const Rational closed = (x == Rational(1)) ? frisch(p) : eval_decomposition(p, x);
    report.float_closed = closed.to_double();

    const Rational err_direct = abs(Rational::from_double(report.float_direct) - report.exact);
    const Rational err_closed = abs(Rational::from_double(report.float_closed) - report.exact);
    report.exact_is_zero = report.exact.is_zero();
    if (report.exact_is_zero) {
        report.relerr_direct = err_direct.to_double();
        report.relerr_closed = err_closed.to_double();
    } else {
        const Rational magnitude = abs(report.exact);
        report.relerr_direct = (err_direct / magnitude).to_double();
        report.relerr_closed = (err_closed / magnitude).to_double();
    }
    return report;
}

}  // namespace recbinom

#endif  // RECBINOM_STABILITY_HPP

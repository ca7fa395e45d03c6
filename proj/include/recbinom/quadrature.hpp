#ifndef RECBINOM_QUADRATURE_HPP
#define RECBINOM_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "recbinom/combinatorics.hpp"
#include "recbinom/rational.hpp"

namespace recbinom {

struct NoConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename F>
struct AdaptiveSimpson {
    F& f;
    std::size_t budget;
    std::size_t evaluations = 0;

    double eval(double t) {
        if (++evaluations > budget)
            throw NoConvergenceError("quadrature exceeded its evaluation budget");
        return f(t);
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
        if (depth > 64)
            throw NoConvergenceError("quadrature exceeded its subdivision depth");
        const double m = 0.5 * (a + b);
        const double h = b - a;
        const double flm = eval(a + 0.25 * h);
        const double frm = eval(a + 0.75 * h);
        const double left = h / 12.0 * (fa + 4.0 * flm + fm);
        const double right = h / 12.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol) {
            return left + right + delta / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace detail

/// Adaptive-bisection Simpson rule with an absolute error target and a hard
/// budget on integrand evaluations.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double tol, std::size_t budget) {
    if (!(tol > 0)) throw std::invalid_argument("integrate_adaptive: tol must be positive");
    detail::AdaptiveSimpson<F> state{f, budget};
    const double fa = state.eval(a);
    const double fm = state.eval(0.5 * (a + b));
    const double fb = state.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return state.recurse(a, b, fa, fm, fb, whole, tol, 0);
}

inline double powi(double base, int exponent) {
    double result = 1.0;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

/// Integrand of the parametric integral representation:
/// t^c (1-t)^(b-c) [ (b+1)(1-x(1-t))^n - n x (1-t)(1-x(1-t))^(n-1) ].
/// Finite on all of [0,1] for valid parameters (exponents c >= 1, b-c >= 0).
inline double parametric_integrand(const SumParams& p, double x, double t) {
    const double u = 1.0 - t;
    const double base = 1.0 - x * u;
    double bracket = (p.b + 1) * powi(base, p.n);
    if (p.n >= 1) bracket -= p.n * x * u * powi(base, p.n - 1);
    return powi(t, p.c) * powi(u, p.b - p.c) * bracket;
}

/// Numerically integrates the representation above; agrees with the exact
/// parametric sum up to tol plus the quadrature estimate's slack.
inline double quad_check(const SumParams& p, const Rational& x, double tol) {
    constexpr std::size_t kBudget = 1'000'000;
    const double xd = x.to_double();
    return integrate_adaptive([&](double t) { return parametric_integrand(p, xd, t); },
                              0.0, 1.0, tol, kBudget);
}

}  // namespace recbinom

#endif  // RECBINOM_QUADRATURE_HPP

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "recbinom/sums.hpp"

using recbinom::Rational;
using recbinom::SumParams;

namespace {

Rational random_x(std::mt19937_64& rng, long long max_den = 25) {
    // rational in [-2, 2]
    const auto den = static_cast<long long>(rng() % max_den) + 1;
    const auto num = static_cast<long long>(rng() % (4 * den + 1)) - 2 * den;
    return Rational(num, den);
}

}  // namespace

TEST_CASE("direct_sum examples") {
    CHECK(recbinom::direct_sum(SumParams::make(0, 4, 2)) == Rational(1, 6));
    CHECK(recbinom::direct_sum(SumParams::make(1, 2, 1)) == Rational(1, 6));
    CHECK(recbinom::direct_sum(SumParams::make(2, 3, 2)) == Rational(1, 10));
}

TEST_CASE("direct_parametric examples") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = static_cast<long long>(rng() % 5) + 1;
        const auto b = c + static_cast<long long>(rng() % 6);
        const auto n = static_cast<long long>(rng() % 12);
        const SumParams p = SumParams::make(n, b, c);
        REQUIRE(recbinom::direct_parametric(p, 0) ==
                Rational(1, recbinom::binomial(p.b, p.c)));
    }
    CHECK(recbinom::direct_parametric(SumParams::make(1, 2, 1), Rational(1, 2)) == Rational(1, 3));
    CHECK(recbinom::direct_parametric(SumParams::make(2, 3, 2), 1) == Rational(1, 10));
}

TEST_CASE("direct_weighted examples and conventions") {
    CHECK(recbinom::direct_weighted(SumParams::make(1, 2, 1), 1, 1) == Rational(-1, 3));
    CHECK(recbinom::direct_weighted(SumParams::make(1, 2, 1), Rational(1, 2), 1) ==
          Rational(-1, 6));

    // 0^0 = 1: m = 0 must reduce to the parametric sum, including the k=0 term
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = static_cast<long long>(rng() % 4) + 1;
        const SumParams p = SumParams::make(rng() % 10, c + rng() % 5, c);
        const Rational x = random_x(rng);
        REQUIRE(recbinom::direct_weighted(p, x, 0) == recbinom::direct_parametric(p, x));
    }

    // n = 0 with m >= 1: the only term carries k^m = 0
    CHECK(recbinom::direct_weighted(SumParams::make(0, 4, 2), Rational(7, 3), 3) == Rational(0));
}

TEST_CASE("direct_lifted examples") {
    CHECK(recbinom::direct_lifted(SumParams::make(1, 2, 1), 1, 1) == Rational(1, 3));
    CHECK(recbinom::direct_lifted(SumParams::make(2, 3, 2), 1, 1) == Rational(1, 5));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = static_cast<long long>(rng() % 4) + 1;
        const SumParams p = SumParams::make(rng() % 10, c + rng() % 5, c);
        const Rational x = random_x(rng);
        REQUIRE(recbinom::direct_lifted(p, x, 0) == recbinom::direct_parametric(p, x));
    }
}

TEST_CASE("lift recursion: m+1 divides the m-lift terms by k+1") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = static_cast<long long>(rng() % 4) + 1;
        const SumParams p = SumParams::make(rng() % 10, c + rng() % 6, c);
        const Rational x = random_x(rng);
        for (unsigned m = 0; m <= 3; ++m) {
            Rational termwise = 0;
            for (int k = 0; k <= p.n; ++k) {
                termwise += recbinom::parametric_term(p, x, k) /
                            recbinom::pow(Rational(k + 1), m + 1);
            }
            REQUIRE(recbinom::direct_lifted(p, x, m + 1) == termwise);
        }
    }
}

TEST_CASE("polynomial_coeffs examples and invariants") {
    CHECK(recbinom::polynomial_coeffs(SumParams::make(0, 4, 2)).coefficients ==
          std::vector<Rational>{Rational(1, 6)});
    CHECK(recbinom::polynomial_coeffs(SumParams::make(1, 2, 1)).coefficients ==
          std::vector<Rational>{Rational(1, 2), Rational(-1, 3)});
    CHECK(recbinom::polynomial_coeffs(SumParams::make(2, 3, 2)).coefficients ==
          std::vector<Rational>{Rational(1, 3), Rational(-1, 3), Rational(1, 10)});

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        const auto c = static_cast<long long>(rng() % 5) + 1;
        const SumParams p = SumParams::make(rng() % 12, c + rng() % 6, c);
        const auto poly = recbinom::polynomial_coeffs(p);
        REQUIRE(poly.coefficients.size() == static_cast<std::size_t>(p.n) + 1);
        REQUIRE(poly.coefficients[0] == Rational(1, recbinom::binomial(p.b, p.c)));
        for (std::size_t k = 0; k < poly.coefficients.size(); ++k) {
            REQUIRE(poly.coefficients[k].sign() == (k % 2 == 0 ? 1 : -1));
        }
        const Rational x = random_x(rng);
        REQUIRE(poly.eval(x) == recbinom::direct_parametric(p, x));
    }
}

TEST_CASE("apply_x_ddx examples") {
    const recbinom::SumPolynomial base{{Rational(1, 2), Rational(-1, 3)}};
    CHECK(recbinom::apply_x_ddx(base, 0).coefficients == base.coefficients);
    CHECK(recbinom::apply_x_ddx(base, 1).coefficients ==
          std::vector<Rational>{Rational(0), Rational(-1, 3)});

    const recbinom::SumPolynomial quad{{Rational(1, 3), Rational(-1, 3), Rational(1, 10)}};
    CHECK(recbinom::apply_x_ddx(quad, 2).coefficients ==
          std::vector<Rational>{Rational(0), Rational(-1, 3), Rational(2, 5)});
}

TEST_CASE("operator and definition agree: (x d/dx)^m of S equals T") {
    std::mt19937_64 rng(10);
    for (int n = 0; n <= 10; ++n) {
        for (int b = 1; b <= 12; ++b) {
            for (int c = 1; c <= b; ++c) {
                const SumParams p = SumParams::make(n, b, c);
                const auto poly = recbinom::polynomial_coeffs(p);
                for (unsigned m = 0; m <= 4; ++m) {
                    const Rational x = random_x(rng);
                    REQUIRE(recbinom::apply_x_ddx(poly, m).eval(x) ==
                            recbinom::direct_weighted(p, x, m));
                }
            }
        }
    }
}

TEST_CASE("classical binomial identities used by the closed-form proof") {
    std::mt19937_64 rng(11);
    for (int n = 0; n <= 15; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const Rational y = random_x(rng, 20);
            Rational plain = 0;
            Rational weighted = 0;
            for (int k = 0; k <= n; ++k) {
                Rational term(recbinom::binomial(n, k));
                if (k % 2 == 1) term = -term;
                term *= recbinom::pow(y, k);
                plain += term;
                weighted += Rational(k) * term;
            }
            REQUIRE(plain == recbinom::pow(Rational(1) - y, n));
            const Rational expected_weighted =
                n == 0 ? Rational(0)
                       : Rational(-n) * y * recbinom::pow(Rational(1) - y, n - 1);
            REQUIRE(weighted == expected_weighted);
        }
    }
}

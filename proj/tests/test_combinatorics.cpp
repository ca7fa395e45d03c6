#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "recbinom/combinatorics.hpp"

using recbinom::BigInt;
using recbinom::Rational;
using recbinom::SumParams;

TEST_CASE("factorial") {
    CHECK(recbinom::factorial(0) == 1);
    CHECK(recbinom::factorial(1) == 1);
    CHECK(recbinom::factorial(5) == 120);
    CHECK(recbinom::factorial(10) == 3628800);
    CHECK(recbinom::factorial(25) == BigInt("15511210043330985984000000"));
}

TEST_CASE("binomial basics") {
    CHECK(recbinom::binomial(0, 0) == 1);
    CHECK(recbinom::binomial(7, 0) == 1);
    CHECK(recbinom::binomial(5, 2) == 10);
    CHECK(recbinom::binomial(4, 2) == 6);
    CHECK(recbinom::binomial(10, 10) == 1);
    CHECK(recbinom::binomial(45, 10) == BigInt("3190187286"));

    CHECK(recbinom::binomial(5, -1) == 0);
    CHECK(recbinom::binomial(5, 6) == 0);
    CHECK_THROWS_AS(recbinom::binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial agrees with Pascal triangle oracle") {
    // independent oracle: triangle built by additions only
    constexpr int kMax = 60;
    std::vector<std::vector<BigInt>> triangle(kMax + 1);
    triangle[0] = {1};
    for (int n = 1; n <= kMax; ++n) {
        triangle[n].assign(n + 1, 0);
        triangle[n][0] = 1;
        triangle[n][n] = 1;
        for (int k = 1; k < n; ++k) {
            triangle[n][k] = triangle[n - 1][k - 1] + triangle[n - 1][k];
        }
    }
    for (int n = 0; n <= kMax; ++n) {
        for (int k = 0; k <= n; ++k) {
            REQUIRE(recbinom::binomial(n, k) == triangle[n][k]);
        }
    }
}

TEST_CASE("pochhammer") {
    CHECK(recbinom::pochhammer(Rational(7, 3), 0) == Rational(1));
    CHECK(recbinom::pochhammer(Rational(3), 2) == Rational(12));
    CHECK(recbinom::pochhammer(Rational(1, 2), 3) == Rational(15, 8));

    // non-positive integer arguments hit zero once the rise crosses zero
    CHECK(recbinom::pochhammer(Rational(-5), 2) == Rational(20));
    CHECK(recbinom::pochhammer(Rational(-5), 3) == Rational(-60));
    CHECK(recbinom::pochhammer(Rational(-5), 5) == Rational(-120));
    CHECK(recbinom::pochhammer(Rational(-5), 6) == Rational(0));
    CHECK(recbinom::pochhammer(Rational(-5), 9) == Rational(0));
}

TEST_CASE("harmonic pochhammer ratio") {
    // (1)_k / (2)_k = 1/(k+1), the kernel behind the harmonic lifts
    for (unsigned k = 0; k <= 50; ++k) {
        REQUIRE(recbinom::pochhammer(Rational(1), k) / recbinom::pochhammer(Rational(2), k) ==
                Rational(1, k + 1));
    }
}

TEST_CASE("beta_int") {
    CHECK(recbinom::beta_int(0, 0) == Rational(1));
    CHECK(recbinom::beta_int(1, 2) == Rational(1, 12));
    CHECK(recbinom::beta_int(2, 2) == Rational(1, 30));
}

TEST_CASE("beta factorial identity") {
    for (unsigned m = 0; m <= 40; ++m) {
        for (unsigned n = 0; n <= 40; ++n) {
            REQUIRE(recbinom::beta_int(m, n) * Rational(recbinom::factorial(m + n + 1)) ==
                    Rational(recbinom::factorial(m) * recbinom::factorial(n)));
        }
    }
}

TEST_CASE("inverse binomial via beta") {
    CHECK(recbinom::inverse_binomial_via_beta(4, 4, 0) == Rational(1));
    CHECK(recbinom::inverse_binomial_via_beta(2, 1, 0) == Rational(1, 2));
    CHECK(recbinom::inverse_binomial_via_beta(3, 2, 1) == Rational(1, 6));
    CHECK_THROWS_AS(recbinom::inverse_binomial_via_beta(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(recbinom::inverse_binomial_via_beta(2, 0, 0), std::invalid_argument);
}

TEST_CASE("inverse binomial identity over the proposition grid") {
    for (unsigned c = 1; c <= 12; ++c) {
        for (unsigned b = c; b <= 12; ++b) {
            for (unsigned k = 0; k <= 12; ++k) {
                REQUIRE(recbinom::inverse_binomial_via_beta(b, c, k) *
                            Rational(recbinom::binomial(b + k, c)) ==
                        Rational(1));
            }
        }
    }
}

TEST_CASE("stirling2 rows") {
    CHECK(recbinom::stirling2_row(0) == std::vector<BigInt>{1});
    CHECK(recbinom::stirling2_row(1) == std::vector<BigInt>{0, 1});
    CHECK(recbinom::stirling2_row(4) == std::vector<BigInt>{0, 1, 7, 6, 1});

    // explicit-formula oracle: S(m,r) = (1/r!) sum_j (-1)^j C(r,j) (r-j)^m
    for (unsigned m = 0; m <= 8; ++m) {
        const auto row = recbinom::stirling2_row(m);
        REQUIRE(row.size() == m + 1);
        for (unsigned r = 0; r <= m; ++r) {
            Rational expected = 0;
            for (unsigned j = 0; j <= r; ++j) {
                Rational term(recbinom::binomial(r, j) * recbinom::ipow(r - j, m));
                if (j % 2 == 1) term = -term;
                expected += term;
            }
            expected /= Rational(recbinom::factorial(r));
            REQUIRE(Rational(row[r]) == expected);
        }
    }
}

TEST_CASE("ipow convention") {
    CHECK(recbinom::ipow(0, 0) == 1);
    CHECK(recbinom::ipow(0, 3) == 0);
    CHECK(recbinom::ipow(3, 4) == 81);
}

TEST_CASE("SumParams validation") {
    const SumParams p = SumParams::make(2, 3, 2);
    CHECK(p.n == 2);
    CHECK(p.b == 3);
    CHECK(p.c == 2);

    CHECK_THROWS_WITH(SumParams::make(-1, 3, 2), Catch::Matchers::ContainsSubstring("n >= 0"));
    CHECK_THROWS_WITH(SumParams::make(0, 3, 0), Catch::Matchers::ContainsSubstring("c > 0"));
    CHECK_THROWS_WITH(SumParams::make(0, 2, 3), Catch::Matchers::ContainsSubstring("b >= c"));
}

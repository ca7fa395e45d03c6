#ifndef RECBINOM_RATIONAL_HPP
#define RECBINOM_RATIONAL_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace recbinom {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational in canonical reduced form:
/// gcd(|num|, den) == 1 and den >= 1 after every operation; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}                 // NOLINT(google-explicit-constructor)
    Rational(BigInt value) : num_(std::move(value)) {}         // NOLINT(google-explicit-constructor)

    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        canonicalize();
    }

    /// Parses "p" or "p/q" with optional leading sign on p and unsigned q.
    static Rational parse(std::string_view text) {
        const auto fail = [&] {
            throw std::invalid_argument("malformed rational '" + std::string(text) +
                                        "' (expected \"p\" or \"p/q\")");
        };
        std::size_t pos = 0;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        const std::size_t num_begin = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == num_begin) fail();
        BigInt num(std::string(text.substr(num_begin, pos - num_begin)));
        if (negative) num = -num;
        if (pos == text.size()) return Rational(std::move(num));
        if (text[pos] != '/') fail();
        const std::size_t den_begin = ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den_begin || pos != text.size()) fail();
        BigInt den(std::string(text.substr(den_begin)));
        if (den == 0) throw std::invalid_argument("malformed rational '" + std::string(text) +
                                                  "': zero denominator");
        return Rational(std::move(num), std::move(den));
    }

    /// Exact conversion; every finite binary64 is a dyadic rational.
    static Rational from_double(double value) {
        if (!std::isfinite(value))
            throw std::invalid_argument("cannot convert non-finite double to Rational");
        if (value == 0.0) return Rational();
        int exp = 0;
        const double mant = std::frexp(value, &exp);          // |mant| in [0.5, 1)
        const auto scaled = static_cast<long long>(std::ldexp(mant, 53));  // exact integer
        BigInt num(scaled);
        const int e = exp - 53;
        if (e >= 0) return Rational(num << e);
        return Rational(std::move(num), BigInt(1) << -e);
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Correctly rounded (nearest-even) conversion to binary64.
    double to_double() const {
        if (num_ == 0) return 0.0;
        const bool negative = num_ < 0;
        const BigInt p = boost::multiprecision::abs(num_);
        const BigInt& q = den_;

        auto floor_scaled = [&](long shift) {
            if (shift >= 0) return std::pair<BigInt, BigInt>{p << shift, q};
            return std::pair<BigInt, BigInt>{p, q << -shift};
        };

        // Scale so that t = floor(p * 2^shift / q) has exactly 53 bits; the
        // final value is t * 2^-shift after rounding, and a 53-bit t converts
        // to double exactly (no second rounding).
        long shift = 53 - (static_cast<long>(boost::multiprecision::msb(p)) -
                           static_cast<long>(boost::multiprecision::msb(q)));
        BigInt t, scaled_num, scaled_den;
        for (;;) {
            auto [np, nq] = floor_scaled(shift);
            t = np / nq;
            const long bits = static_cast<long>(boost::multiprecision::msb(t)) + 1;
            if (bits < 53) { ++shift; continue; }
            if (bits > 53) { --shift; continue; }
            scaled_num = std::move(np);
            scaled_den = std::move(nq);
            break;
        }
        // Round to nearest, ties to even, using the exact remainder.
        const BigInt rem2 = (scaled_num - t * scaled_den) << 1;
        if (rem2 > scaled_den || (rem2 == scaled_den && boost::multiprecision::bit_test(t, 0))) {
            ++t;
            if (boost::multiprecision::msb(t) == 53) {  // carried into 2^53: renormalize
                t >>= 1;
                --shift;
            }
        }
        const double magnitude = std::ldexp(t.convert_to<double>(), static_cast<int>(-shift));
        return negative ? -magnitude : magnitude;
    }

    Rational operator-() const {
        Rational r(*this);
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& other) {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ *= other.den_;
        canonicalize();
        return *this;
    }
    Rational& operator-=(const Rational& other) {
        num_ = num_ * other.den_ - other.num_ * den_;
        den_ *= other.den_;
        canonicalize();
        return *this;
    }
    Rational& operator*=(const Rational& other) {
        num_ *= other.num_;
        den_ *= other.den_;
        canonicalize();
        return *this;
    }
    Rational& operator/=(const Rational& other) {
        if (other.num_ == 0) throw std::domain_error("Rational division by zero");
        num_ *= other.den_;
        den_ *= other.num_;
        canonicalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    void canonicalize() {
        if (den_ == 0) throw std::domain_error("Rational with zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline Rational abs(const Rational& value) {
    return value.sign() < 0 ? -value : value;
}

inline Rational pow(const Rational& base, long long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw std::domain_error("pow: zero base with negative exponent");
        return pow(Rational(base.den(), base.num()), -exponent);
    }
    return Rational(boost::multiprecision::pow(base.num(), static_cast<unsigned>(exponent)),
                    boost::multiprecision::pow(base.den(), static_cast<unsigned>(exponent)));
}

}  // namespace recbinom

#endif  // RECBINOM_RATIONAL_HPP

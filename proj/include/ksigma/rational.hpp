#pragma once

/// @file rational.hpp
/// @brief Exact rational numbers.
///
/// Thin value type over GMP's mpq_class. Always canonical: gcd(|num|, den) = 1
/// and den >= 1. Nothing in the engine rounds; decimals are produced only for
/// display via decimal().

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ksigma {

class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& integer) : v_(integer) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }

    /// Parses "a", "-a/b" or a finite decimal such as "0.17" (read exactly as 17/100).
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class num() const { return v_.get_num(); }
    [[nodiscard]] mpz_class den() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return v_.get_d(); }

    /// Canonical wire form: "p/q", or "p" when q = 1.
    [[nodiscard]] std::string str() const;
    /// Decimal rendering rounded half away from zero to `digits` fractional digits.
    [[nodiscard]] std::string decimal(int digits = 10) const;

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational reciprocal() const;
    [[nodiscard]] Rational pow(unsigned exponent) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_{0};
};

[[nodiscard]] Rational min(const Rational& a, const Rational& b);
[[nodiscard]] Rational max(const Rational& a, const Rational& b);
[[nodiscard]] Rational midpoint(const Rational& a, const Rational& b);

/// Least common multiple of the denominators.
template <typename Range>
[[nodiscard]] mpz_class denominator_lcm(const Range& values)
{
    mpz_class l = 1;
    for (const Rational& v : values) {
        mpz_class d = v.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

}  // namespace ksigma

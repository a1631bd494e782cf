#include "ksigma/rational.hpp"

#include "ksigma/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ksigma {

namespace {

bool is_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!is_digits(s)) {
        throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
    }
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw InvalidArgument("zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string_view t = trim(text);
    if (t.empty()) {
        throw InvalidArgument("empty rational");
    }
    if (const auto slash = t.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(trim(t.substr(0, slash)), t);
        const std::string_view den_text = trim(t.substr(slash + 1));
        if (!is_digits(den_text)) {
            throw InvalidArgument("malformed rational: '" + std::string(t) + "'");
        }
        const mpz_class den(std::string(den_text), 10);
        if (den == 0) {
            throw InvalidArgument("zero denominator in '" + std::string(t) + "'");
        }
        return Rational(num, den);
    }
    if (const auto dot = t.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = t.substr(0, dot);
        const std::string_view frac_part = t.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if ((!int_part.empty() && !is_digits(int_part)) || !is_digits(frac_part)) {
            throw InvalidArgument("malformed decimal: '" + std::string(t) + "'");
        }
        const mpz_class whole = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
        const mpz_class frac(std::string(frac_part), 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        mpz_class num = whole * scale + frac;
        if (negative) {
            num = -num;
        }
        return Rational(num, scale);
    }
    return Rational(parse_integer(t, t));
}

std::string Rational::str() const
{
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const
{
    digits = std::max(digits, 0);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = ::abs(v_.get_num()) * scale;
    const mpz_class d = v_.get_den();
    mpz_class q;
    mpz_class r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (2 * r >= d) {
        q += 1;
    }
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<size_t>(digits)) {
            s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<size_t>(digits), ".");
    }
    if (sign() < 0 && q != 0) {
        s.insert(0, "-");
    }
    return s;
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(v_)));
}

Rational Rational::reciprocal() const
{
    if (sign() == 0) {
        throw InvalidArgument("reciprocal of zero");
    }
    return Rational(v_.get_den(), v_.get_num());
}

Rational Rational::pow(unsigned exponent) const
{
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), exponent);
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.sign() == 0) {
        throw InvalidArgument("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace ksigma

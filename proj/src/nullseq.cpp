#include "ksigma/nullseq.hpp"

#include "ksigma/errors.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace ksigma {

namespace {

struct Bracket {
    Rational lo;  // P(lo) < 0
    Rational hi;  // P(hi) > 0
    bool exact = false;
};

void check_sn(unsigned s, unsigned n)
{
    if (s < 2) {
        throw InvalidArgument("q_n needs s >= 2");
    }
    if (n < 2) {
        throw InvalidArgument("q_n needs n >= 2");
    }
    if (s == 2 && n == 2) {
        throw InvalidArgument("q_2 for s = 2 equals 1, outside (0,1)");
    }
}

Bracket initial_bracket(unsigned s, unsigned n)
{
    const Rational one_over_s(1, static_cast<long>(s));
    if (n == 2) {
        const Rational q(1, static_cast<long>(s - 1));
        return {q, q, true};
    }
    Rational hi = qn_upper_limit(s, n);
    if (qn_polynomial(s, n, hi).sign() <= 0) {
        hi = Rational(1, static_cast<long>(s - 1));
    }
    return {one_over_s, hi, false};
}

// One bisection step; returns false when the midpoint hits the root exactly.
bool bisect(unsigned s, unsigned n, Bracket& b)
{
    const Rational mid = midpoint(b.lo, b.hi);
    const int sgn = qn_polynomial(s, n, mid).sign();
    if (sgn == 0) {
        b = {mid, mid, true};
        return false;
    }
    (sgn < 0 ? b.lo : b.hi) = mid;
    return true;
}

mpz_class collapsed_count(unsigned s, unsigned n)
{
    mpz_class sn;
    mpz_class two;
    mpz_ui_pow_ui(sn.get_mpz_t(), s, n);
    mpz_ui_pow_ui(two.get_mpz_t(), 2, n - 1);
    return sn - two;
}

RatioValue to_ratio(const Bracket& b, unsigned s, unsigned n)
{
    const GeometricRootTag tag{s, n};
    if (b.exact) {
        return RatioValue::enclosure(b.lo, b.lo, tag);
    }
    return RatioValue::enclosure(b.lo, b.hi, tag);
}

Rational bound_at(unsigned s, unsigned n, const Rational& q)
{
    return Rational(collapsed_count(s, n)) * q.pow(n);
}

// Continues bisection from an existing certified enclosure.
Bracket refine(unsigned s, unsigned n, const RatioValue& q, const Rational& width)
{
    Bracket b{q.lo(), q.hi(), q.is_exact()};
    unsigned steps = 0;
    while (!b.exact && b.hi - b.lo > width) {
        if (++steps > kMaxBisectionSteps) {
            throw BudgetExceeded("q_n refinement exceeded the bisection cap", n);
        }
        bisect(s, n, b);
    }
    return b;
}

}  // namespace

Rational qn_polynomial(unsigned s, unsigned n, const Rational& x)
{
    Rational sum = 0;
    Rational xk = 1;
    for (unsigned k = 1; k < n; ++k) {
        xk *= x;
        sum += xk;
    }
    return sum - Rational(1, static_cast<long>(s - 1));
}

Rational qn_upper_limit(unsigned s, unsigned n)
{
    check_sn(s, n);
    mpz_class sn1;
    mpz_ui_pow_ui(sn1.get_mpz_t(), s, n - 1);
    // 1 / (s (1 - 1/s^(n-1))) = s^(n-1) / (s (s^(n-1) - 1))
    return Rational(sn1, mpz_class(mpz_class(s) * (sn1 - 1)));
}

RatioValue qn_root(unsigned s, unsigned n, const Rational& tol)
{
    check_sn(s, n);
    if (tol.sign() <= 0) {
        throw InvalidArgument("tolerance must be positive");
    }
    const Rational one_over_s(1, static_cast<long>(s));
    Bracket b = initial_bracket(s, n);
    // For n = 2 the root is 1/(s-1) and meets the limit with equality.
    const std::optional<Rational> limit = n > 2 ? std::optional<Rational>(qn_upper_limit(s, n)) : std::nullopt;
    unsigned steps = 0;
    while (!b.exact && (b.hi - b.lo > tol || b.lo <= one_over_s || (limit && b.hi >= *limit))) {
        if (++steps > kMaxBisectionSteps) {
            throw BudgetExceeded("q_n bisection exceeded the step cap", n);
        }
        bisect(s, n, b);
    }
    return to_ratio(b, s, n);
}

std::optional<StarConditionWitness> star_condition_witness(const FiniteSigma& sigma)
{
    const Rational s(static_cast<long>(sigma.size()));
    std::optional<Rational> a;
    for (const Rational& x : sigma) {
        if (sigma.contains(x + Rational(1))) {
            a = x;
            break;
        }
    }
    if (!a) {
        return std::nullopt;
    }
    // Candidates for b and c: y with y + 1 and y + s both in Sigma.
    std::vector<Rational> candidates;
    for (const Rational& x : sigma) {
        const Rational y = x - Rational(1);
        if (sigma.contains(y + s)) {
            candidates.push_back(y);
        }
    }
    if (candidates.size() < 2) {
        return std::nullopt;
    }
    return StarConditionWitness{*a, candidates[1], candidates[0]};
}

std::optional<QnCertificate> qn_certificate(const FiniteSigma& sigma, const StarConditionWitness& w, unsigned n,
                                            const Rational& tol)
{
    const auto s = static_cast<unsigned>(sigma.size());
    RatioValue q = qn_root(s, n, tol);
    Bracket b{q.lo(), q.hi(), q.is_exact()};
    for (unsigned steps = 0;; ++steps) {
        if (bound_at(s, n, b.hi) < Rational(1)) {
            return QnCertificate{s, n, to_ratio(b, s, n), bound_at(s, n, b.hi), w};
        }
        if (b.exact || bound_at(s, n, b.lo) >= Rational(1)) {
            return std::nullopt;
        }
        if (steps >= kMaxBisectionSteps) {
            throw BudgetExceeded("could not decide the collapsed bound for n = " + std::to_string(n), n);
        }
        bisect(s, n, b);
    }
}

std::vector<QnCertificate> qn_sequence(const FiniteSigma& sigma, unsigned count, const Rational& tol)
{
    if (count == 0) {
        throw InvalidArgument("count must be positive");
    }
    const auto w = star_condition_witness(sigma);
    if (!w) {
        throw InvalidArgument("digit set has no {a, a+1, b+1, c+1, b+s, c+s} witness");
    }
    const auto s = static_cast<unsigned>(sigma.size());
    constexpr unsigned kMaxN = 512;
    std::vector<QnCertificate> out;
    for (unsigned n = 2; out.size() < count; ++n) {
        if (n > kMaxN) {
            throw BudgetExceeded("no further q_n certificates up to n = " + std::to_string(kMaxN), kMaxN);
        }
        if (s == 2 && n == 2) {
            continue;
        }
        if (auto cert = qn_certificate(sigma, *w, n, tol)) {
            out.push_back(std::move(*cert));
        }
    }
    // Separate neighbouring enclosures so the sequence is visibly decreasing.
    for (std::size_t k = 1; k < out.size(); ++k) {
        QnCertificate& prev = out[k - 1];
        QnCertificate& cur = out[k];
        while (!(cur.q_enclosure.hi() < prev.q_enclosure.lo())) {
            const Rational wp = prev.q_enclosure.width();
            const Rational wc = cur.q_enclosure.width();
            if (wp.sign() == 0 && wc.sign() == 0) {
                throw Error("q_n roots coincide for n = " + std::to_string(prev.n) + ", " + std::to_string(cur.n));
            }
            if (wp >= wc) {
                prev.q_enclosure = to_ratio(refine(s, prev.n, prev.q_enclosure, wp / Rational(2)), s, prev.n);
                prev.collapsed_bound = bound_at(s, prev.n, prev.q_enclosure.hi());
            } else {
                cur.q_enclosure = to_ratio(refine(s, cur.n, cur.q_enclosure, wc / Rational(2)), s, cur.n);
                cur.collapsed_bound = bound_at(s, cur.n, cur.q_enclosure.hi());
            }
        }
    }
    return out;
}

}  // namespace ksigma

#include "ksigma/bounds.hpp"

#include "ksigma/errors.hpp"

#include <optional>

namespace ksigma {

namespace {

void check_star(const StarFunction& g)
{
    if (g.n == 0) {
        throw InvalidArgument("(*)-function needs n >= 1");
    }
    if (g.gamma < Rational(-1) || g.gamma > Rational(1)) {
        throw InvalidArgument("(*)-function needs gamma in [-1, 1]");
    }
}

void check_unit(const Rational& x)
{
    if (x.sign() < 0 || x >= Rational(1)) {
        throw InvalidArgument("(*)-function argument must lie in [0, 1), got " + x.str());
    }
}

// Upper bound on |g'| over [0, hi].
Rational derivative_bound(const StarFunction& g, const Rational& hi)
{
    Rational m = 0;
    for (unsigned k = 1; k < g.n; ++k) {
        m += Rational(static_cast<long>(k)) * hi.pow(k - 1);
    }
    m += Rational(static_cast<long>(g.n)) * g.gamma.abs() * hi.pow(g.n - 1);
    const Rational one_minus = Rational(1) - hi;
    m += Rational(static_cast<long>(g.n + 1)) * hi.pow(g.n) / (one_minus * one_minus);
    return m;
}

Rational dyadic(unsigned k)
{
    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
    return Rational(mpz_class(1), two_k);
}

void check_d(const Rational& d)
{
    if (d.sign() <= 0) {
        throw InvalidArgument("d must be positive, got " + d.str());
    }
    if (d > Rational(1, 2)) {
        throw InvalidArgument("alpha lower bound is only available for d <= 1/2, got " + d.str());
    }
}

}  // namespace

Rational star_eval(const StarFunction& g, const Rational& x)
{
    check_star(g);
    check_unit(x);
    Rational v = 0;
    Rational xk = 1;
    for (unsigned k = 1; k < g.n; ++k) {
        xk *= x;
        v -= xk;
    }
    xk *= x;  // x^n
    v += g.gamma * xk;
    v += xk * x / (Rational(1) - x);
    return v;
}

Rational star_derivative(const StarFunction& g, const Rational& x)
{
    check_star(g);
    check_unit(x);
    Rational v = 0;
    Rational xk = 1;  // x^(k-1)
    for (unsigned k = 1; k < g.n; ++k) {
        v -= Rational(static_cast<long>(k)) * xk;
        xk *= x;
    }
    // xk = x^(n-1)
    v += Rational(static_cast<long>(g.n)) * g.gamma * xk;
    const Rational xn = xk * x;
    const Rational one_minus = Rational(1) - x;
    v += xn * (Rational(static_cast<long>(g.n + 1)) - Rational(static_cast<long>(g.n)) * x) / (one_minus * one_minus);
    return v;
}

StarMinimum star_min(const StarFunction& g, const Rational& tol)
{
    check_star(g);
    if (tol.sign() <= 0) {
        throw InvalidArgument("tolerance must be positive");
    }
    if (star_derivative(g, 0).sign() >= 0) {
        // g is non-decreasing from 0: the minimum sits at the left end.
        return StarMinimum{{0, 0}, {0, 0}};
    }
    Rational lo = 0;
    Rational hi;
    for (unsigned k = 1;; ++k) {
        hi = Rational(1) - dyadic(k);
        if (star_derivative(g, hi).sign() > 0) {
            break;
        }
        lo = hi;
    }
    while (true) {
        const Rational w = hi - lo;
        if (w <= tol && derivative_bound(g, hi) * w <= tol) {
            break;
        }
        const Rational mid = midpoint(lo, hi);
        const int sgn = star_derivative(g, mid).sign();
        if (sgn == 0) {
            const Rational v = star_eval(g, mid);
            return StarMinimum{{mid, mid}, {v, v}};
        }
        (sgn < 0 ? lo : hi) = mid;
    }
    const Rational g_lo = star_eval(g, lo);
    const Rational g_hi = star_eval(g, hi);
    const Rational upper = min(g_lo, g_hi);
    const Rational lower = g_lo - derivative_bound(g, hi) * (hi - lo);
    return StarMinimum{{lo, hi}, {lower, upper}};
}

bool closed_form_branch(const Rational& d)
{
    const Rational t = Rational(3) - d;
    return t.sign() > 0 && t * t >= Rational(8);
}

Rational alpha_cubic(const Rational& d, const Rational& x)
{
    const Rational y = x - Rational(1);
    return Rational(2) * y * y * y + (Rational(4) - Rational(2) * d) * y * y + Rational(3) * y + Rational(1);
}

Enclosure sqrt_enclosure(const Rational& x, const Rational& tol)
{
    if (x.sign() < 0) {
        throw InvalidArgument("square root of a negative number");
    }
    if (tol.sign() <= 0) {
        throw InvalidArgument("tolerance must be positive");
    }
    const mpz_class num = x.num();
    const mpz_class den = x.den();
    if (mpz_perfect_square_p(num.get_mpz_t()) != 0 && mpz_perfect_square_p(den.get_mpz_t()) != 0) {
        mpz_class a;
        mpz_class b;
        mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
        const Rational r(a, b);
        return {r, r};
    }
    unsigned k = 1;
    while (dyadic(k) > tol) {
        ++k;
    }
    // floor(sqrt(floor(x * 4^k))) / 2^k <= sqrt(x) < (that + 1) / 2^k
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    mpz_class m = num * four_k;
    mpz_fdiv_q(m.get_mpz_t(), m.get_mpz_t(), den.get_mpz_t());
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
    return {Rational(s, two_k), Rational(mpz_class(s + 1), two_k)};
}

AlphaBound alpha_lower(const Rational& d, const Rational& tol)
{
    check_d(d);
    if (tol.sign() <= 0) {
        throw InvalidArgument("tolerance must be positive");
    }
    if (closed_form_branch(d)) {
        // x = sqrt(d) / (1 + sqrt(d)) is increasing in sqrt(d) with slope <= 1.
        const Enclosure r = sqrt_enclosure(d, tol);
        const Rational lo = r.lo / (Rational(1) + r.lo);
        const Rational hi = r.hi / (Rational(1) + r.hi);
        return AlphaBound{d, lo == hi ? RatioValue::exact(lo) : RatioValue::enclosure(lo, hi), AlphaBranch::ClosedForm};
    }
    // The cubic is -2d at x = 0 and 1 at x = 1, with a unique real root.
    Rational lo = 0;
    Rational hi = 1;
    while (hi - lo > tol) {
        const Rational mid = midpoint(lo, hi);
        const int sgn = alpha_cubic(d, mid).sign();
        if (sgn == 0) {
            return AlphaBound{d, RatioValue::exact(mid), AlphaBranch::Cubic};
        }
        (sgn < 0 ? lo : hi) = mid;
    }
    return AlphaBound{d, RatioValue::enclosure(lo, hi), AlphaBranch::Cubic};
}

RatioValue alpha_lower_via_star(const Rational& d, const Rational& tol)
{
    check_d(d);
    if (tol.sign() <= 0) {
        throw InvalidArgument("tolerance must be positive");
    }
    const Rational target = -d;
    const Rational inner_tol = tol / Rational(8);

    // Smallest n whose all-minus function g_{n,-1} reaches down to -d. The
    // minima of g_{n,gamma} increase with gamma and g_{n,1} = g_{n-1,-1}.
    unsigned n = 1;
    for (;; ++n) {
        if (n > 64) {
            throw Error("no (*)-function bracket found for d = " + d.str());
        }
        const StarMinimum m = star_min(StarFunction{n, -1}, inner_tol);
        if (m.min_value.lo <= target) {
            break;
        }
    }

    // Bisect gamma: min g_{n,gamma} is increasing in gamma, and the critical
    // point is decreasing in gamma, so the answer lies in
    // [x*(gamma_hi).lo, x*(gamma_lo).hi].
    Rational gamma_lo = -1;
    Rational gamma_hi = 1;
    StarMinimum at_lo = star_min(StarFunction{n, gamma_lo}, inner_tol);
    StarMinimum at_hi = star_min(StarFunction{n, gamma_hi}, inner_tol);
    for (unsigned iter = 0; iter < 400; ++iter) {
        if (at_lo.x_star.hi - at_hi.x_star.lo <= tol) {
            break;
        }
        const Rational mid = midpoint(gamma_lo, gamma_hi);
        std::optional<StarMinimum> m;
        Rational t = inner_tol;
        for (int refine = 0; refine < 40; ++refine) {
            m = star_min(StarFunction{n, mid}, t);
            if (m->min_value.hi < target || m->min_value.lo > target) {
                break;
            }
            t /= Rational(16);
        }
        if (m->min_value.hi < target) {
            gamma_lo = mid;
            at_lo = star_min(StarFunction{n, gamma_lo}, inner_tol);
        } else if (m->min_value.lo > target) {
            gamma_hi = mid;
            at_hi = star_min(StarFunction{n, gamma_hi}, inner_tol);
        } else {
            // min g_{n,mid} is -d to within the refinement floor: take its critical point.
            at_lo = *m;
            at_hi = *m;
            break;
        }
    }
    const Rational lo = at_hi.x_star.lo;
    const Rational hi = at_lo.x_star.hi;
    if (lo.sign() <= 0) {
        throw Error("critical point enclosure touches 0 for d = " + d.str());
    }
    return lo == hi ? RatioValue::exact(lo) : RatioValue::enclosure(lo, hi);
}

}  // namespace ksigma

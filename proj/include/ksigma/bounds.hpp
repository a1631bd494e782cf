#pragma once

/// @file bounds.hpp
/// @brief Lower bound alpha_(d) on the positive-measure window, via (*)-functions.
///
/// A (*)-function is g(x) = -sum_{k<n} x^k + gamma x^n + sum_{k>n} x^k on [0, 1),
/// with gamma in [-1, 1]. For d > 0 the unique (*)-function with minimum -d has
/// its critical point at alpha_(d). Two routes are provided: closed form plus a
/// cubic for d <= 1/2, and a direct search over (n, gamma) used as an oracle.

#include "ksigma/core.hpp"
#include "ksigma/rational.hpp"

namespace ksigma {

/// Closed interval [lo, hi] with rational endpoints; no range restriction.
struct Enclosure {
    Rational lo;
    Rational hi;

    [[nodiscard]] Rational width() const { return hi - lo; }
    [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

inline const Rational kDefaultTolerance{1, 1000000000000L};

struct StarFunction {
    unsigned n = 1;
    Rational gamma;
};

/// Exact g(x); the tail is summed in closed form x^(n+1) / (1 - x).
[[nodiscard]] Rational star_eval(const StarFunction& g, const Rational& x);
/// Exact g'(x).
[[nodiscard]] Rational star_derivative(const StarFunction& g, const Rational& x);

struct StarMinimum {
    Enclosure x_star;
    Enclosure min_value;
};

/// Encloses the critical point and the minimum of g to width <= tol by
/// bisection on the sign of g'.
[[nodiscard]] StarMinimum star_min(const StarFunction& g, const Rational& tol = kDefaultTolerance);

enum class AlphaBranch { ClosedForm, Cubic };

struct AlphaBound {
    Rational d;
    RatioValue value;
    AlphaBranch branch;
};

/// True iff d <= 1/(3 + 2 sqrt 2), decided exactly as (3 - d)^2 >= 8.
[[nodiscard]] bool closed_form_branch(const Rational& d);

/// 2(x-1)^3 + (4-2d)(x-1)^2 + 3(x-1) + 1
[[nodiscard]] Rational alpha_cubic(const Rational& d, const Rational& x);

/// Outward-rounded enclosure of sqrt(x) for x >= 0, exact when x is a rational square.
[[nodiscard]] Enclosure sqrt_enclosure(const Rational& x, const Rational& tol);

/// alpha_(d) for 0 < d <= 1/2.
[[nodiscard]] AlphaBound alpha_lower(const Rational& d, const Rational& tol = kDefaultTolerance);

/// Independent route: finds the (*)-function with minimum -d and returns its
/// critical point.
[[nodiscard]] RatioValue alpha_lower_via_star(const Rational& d, const Rational& tol = kDefaultTolerance);

}  // namespace ksigma

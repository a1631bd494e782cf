#pragma once

/// @file nullseq.hpp
/// @brief Null-measure ratios q_n decreasing to 1/|Sigma|.
///
/// q_n is the positive root of x + x^2 + ... + x^(n-1) = 1/(s-1). When Sigma
/// contains {a, a+1, b+1, c+1, b+s, c+s} with b != c, the digit strings
/// collapse at q_n so that |Sigma_n| <= s^n - 2^(n-1); once
/// (s^n - 2^(n-1)) q_n^n < 1 the set K(Sigma; q_n) is null.

#include "ksigma/bounds.hpp"
#include "ksigma/core.hpp"
#include "ksigma/rational.hpp"

#include <optional>
#include <vector>

namespace ksigma {

struct StarConditionWitness {
    Rational a;
    Rational b;
    Rational c;
};

struct QnCertificate {
    unsigned s = 0;
    unsigned n = 0;
    RatioValue q_enclosure;
    Rational collapsed_bound;  ///< (s^n - 2^(n-1)) * hi^n
    StarConditionWitness witness;
};

/// Refinement cap for deciding inequality (s^n - 2^(n-1)) q^n < 1.
inline constexpr unsigned kMaxBisectionSteps = 1U << 16;

/// x + ... + x^(n-1) - 1/(s-1)
[[nodiscard]] Rational qn_polynomial(unsigned s, unsigned n, const Rational& x);

/// Enclosure of q_n of width <= tol with lower endpoint > 1/s.
[[nodiscard]] RatioValue qn_root(unsigned s, unsigned n, const Rational& tol = kDefaultTolerance);

/// Upper bound 1 / (s (1 - 1/s^(n-1))) on q_n.
[[nodiscard]] Rational qn_upper_limit(unsigned s, unsigned n);

/// Lexicographically smallest (a, b, c) with b > c; nullopt if none exists.
[[nodiscard]] std::optional<StarConditionWitness> star_condition_witness(const FiniteSigma& sigma);

/// Certificate for one n, refining the enclosure until the inequality is
/// decided. nullopt when it provably fails at this n.
[[nodiscard]] std::optional<QnCertificate> qn_certificate(const FiniteSigma& sigma, const StarConditionWitness& w,
                                                          unsigned n, const Rational& tol = kDefaultTolerance);

/// The first `count` certified n >= 2, in increasing n, with strictly
/// decreasing, pairwise disjoint enclosures.
[[nodiscard]] std::vector<QnCertificate> qn_sequence(const FiniteSigma& sigma, unsigned count,
                                                     const Rational& tol = kDefaultTolerance);

}  // namespace ksigma

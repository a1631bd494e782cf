#pragma once

/// @file certificate.hpp
/// @brief Machine-checkable witnesses attached to every certified fact.
///
/// Each witness stores the numbers needed to re-evaluate one inequality. The
/// replay code in verify.hpp re-checks them without calling back into the
/// classification path.

#include "ksigma/bounds.hpp"
#include "ksigma/nullseq.hpp"
#include "ksigma/sumsets.hpp"
#include "ksigma/rational.hpp"

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

namespace ksigma {

enum class TheoremTag {
    IntervalThreshold,       ///< q >= I(Sigma)
    BelowIntervalThreshold,  ///< q < I(Sigma)
    HullSubset,              ///< q >= I(B) for a subset B of Sigma
    ExtremeGap,              ///< q < I(Sigma) and the largest gap is the first or last
    SumsetNullBound,         ///< |Sigma_n| q^n < 1
    CollapsedNullBound,      ///< (s^n - 2^(n-1)) q_n^n < 1 under the six-element condition
    DigitCollision,          ///< two digit strings agree at q = 1/s
    AeWindow,                ///< q inside (1/|Sigma|, alpha_(d)); annotation only
};

[[nodiscard]] std::string_view to_string(TheoremTag tag);
[[nodiscard]] TheoremTag theorem_tag_from_string(std::string_view text);

struct ThresholdWitness {
    Rational q_bound;  ///< lower endpoint of q for >=, upper endpoint for <
    Rational delta_max;
    Rational diam;
    Rational big_i;
};

struct HullWitness {
    Rational q_lower;
    std::vector<Rational> subset;
    Rational little_i;
};

struct ExtremeGapWitness {
    Rational q_upper;
    Rational delta_max;
    Rational diam;
    Rational big_i;
    Rational gap_lo;  ///< the extreme gap is (gap_lo, gap_hi)
    Rational gap_hi;
};

struct SumsetNullWitness {
    unsigned depth = 0;
    std::uint64_t cardinality = 0;
    Rational q_upper;
    bool q_exact = true;
    Rational bound;
};

struct CollapsedNullWitness {
    unsigned s = 0;
    unsigned n = 0;
    Rational q_lo;
    Rational q_hi;
    StarConditionWitness abc;
    Rational collapsed_bound;
};

struct CollisionWitness {
    unsigned s = 0;
    std::vector<Rational> first;
    std::vector<Rational> second;
};

struct WindowWitness {
    Rational window_lo;
    Rational alpha_lo;
    Rational alpha_hi;
    AlphaBranch branch = AlphaBranch::ClosedForm;
    Rational d;
    Rational q_lower;
    Rational q_upper;
};

using Witness = std::variant<ThresholdWitness, HullWitness, ExtremeGapWitness, SumsetNullWitness,
                             CollapsedNullWitness, CollisionWitness, WindowWitness>;

struct Certificate {
    TheoremTag tag;
    Witness witness;
};

[[nodiscard]] Certificate make_certificate(const NullCertificate& cert);
[[nodiscard]] Certificate make_certificate(const QnCertificate& cert);
[[nodiscard]] Certificate make_certificate(const DigitCollision& collision, unsigned s);

}  // namespace ksigma

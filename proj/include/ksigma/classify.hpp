#pragma once

/// @file classify.hpp
/// @brief Structural verdicts for K(Sigma; q), one certificate per fact.

#include "ksigma/bounds.hpp"
#include "ksigma/certificate.hpp"
#include "ksigma/core.hpp"
#include "ksigma/sumsets.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ksigma {

enum class FactKind {
    IsInterval,
    NotInterval,
    ContainsInterval,
    NotFiniteUnionOfIntervals,
    ZeroMeasureCantor,
    AePositiveWindowMember,
};

enum class Trichotomy { FiniteUnionOfIntervals, CantorSet, Cantorval };

[[nodiscard]] std::string_view to_string(FactKind kind);
[[nodiscard]] std::string_view to_string(Trichotomy t);
[[nodiscard]] FactKind fact_kind_from_string(std::string_view text);
[[nodiscard]] Trichotomy trichotomy_from_string(std::string_view text);

struct Fact {
    FactKind kind;
    Certificate certificate;
};

struct Verdict {
    FiniteSigma sigma;
    RatioValue q;
    std::vector<Fact> facts;  ///< ordered by FactKind
    std::optional<Trichotomy> trichotomy;
    /// The three-way label relies on a trichotomy not proven for this digit set.
    bool caveat = false;
    /// The null-measure search stopped on its element budget.
    bool budget_exhausted = false;

    [[nodiscard]] bool has(FactKind kind) const;
    [[nodiscard]] const Fact* find(FactKind kind) const;
};

struct ClassifyOptions {
    unsigned depth_budget = 6;
    Rational max_enclosure_width{1, 1000};
    Rational tolerance = kDefaultTolerance;
    SumsetOptions sumset;
    /// Sigma is known to be the sumset of a multigeometric sequence.
    bool achievement_set = false;
};

/// Positive-measure window (1/|Sigma|, alpha_(d)), valid for almost every q only.
struct AeWindow {
    Rational lo;
    AlphaBound alpha;
};

[[nodiscard]] std::optional<AeWindow> ae_positive_window(const FiniteSigma& sigma,
                                                         const Rational& tol = kDefaultTolerance);

/// Sigma is, up to shift and positive scaling, {0, k, k+1, ..., n-k, n}.
[[nodiscard]] bool is_ferens_like(const FiniteSigma& sigma);

[[nodiscard]] Verdict classify(const FiniteSigma& sigma, const RatioValue& q, const ClassifyOptions& options = {});

struct SweepCell {
    Rational lo;
    Rational hi;
    bool lo_closed = false;
    bool hi_closed = false;
    Rational representative;
    Verdict verdict;
    /// A single point whose verdict differs from two agreeing neighbours.
    bool exceptional = false;

    [[nodiscard]] bool is_point() const { return lo == hi; }
};

struct SweepResult {
    FiniteSigma sigma;
    unsigned resolution = 0;
    std::vector<Rational> critical_points;
    std::optional<AeWindow> window;
    std::vector<SweepCell> cells;

    /// Points in (0,1) where the merged label changes; exceptional points excluded.
    [[nodiscard]] std::vector<Rational> boundaries() const;
    [[nodiscard]] std::vector<Rational> exceptional_points() const;
};

/// Fact kinds plus trichotomy label: cells with equal signatures are merged.
[[nodiscard]] std::vector<int> verdict_signature(const Verdict& v);

[[nodiscard]] SweepResult sweep(const FiniteSigma& sigma, unsigned resolution, const ClassifyOptions& options = {});

}  // namespace ksigma

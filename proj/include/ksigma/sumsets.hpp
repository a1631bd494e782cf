#pragma once

/// @file sumsets.hpp
/// @brief Exact partial sumsets Sigma_n = Sigma + q Sigma + ... + q^(n-1) Sigma.
///
/// Level n is held as sorted int64 values scaled by r^(n-1) * L, where q = p/r
/// and L is the lcm of the digit denominators. Level n+1 is the merge of |Sigma|
/// shifted copies  sigma * L * r^n + p * x,  deduplicated on the fly.
/// Every operation here is a pure function of its inputs.

#include "ksigma/core.hpp"
#include "ksigma/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ksigma {

/// Default cap on the projected element count of a level (env KSIGMA_MAX_ELEMENTS overrides in the CLI).
inline constexpr std::size_t kDefaultMaxElements = std::size_t{1} << 25;

struct SumsetOptions {
    std::size_t max_elements = kDefaultMaxElements;
};

/// Two distinct digit strings (a_0, ..., a_{n-1}) with equal value sum a_i q^i.
struct DigitCollision {
    std::vector<Rational> first;
    std::vector<Rational> second;
    Rational value;
};

struct SumsetReport {
    unsigned depth = 0;
    std::uint64_t cardinality = 0;
    Rational bound;  ///< |Sigma_n| * q^n
    std::optional<DigitCollision> first_collision;
};

/// |Sigma_n| * q^n < 1, hence K(Sigma; q) is Lebesgue-null.
struct NullCertificate {
    unsigned depth = 0;
    std::uint64_t cardinality = 0;
    Rational q;
    Rational bound;
};

struct CoverInterval {
    Rational lo;
    Rational hi;
};

struct CoverReport {
    unsigned depth = 0;
    std::uint64_t cover_intervals = 0;  ///< |Sigma_n|
    std::uint64_t component_count = 0;  ///< connected components of the union
    Rational piece_length;              ///< q^n * diam K
    Rational diam_k;                    ///< diam(Sigma) / (1 - q)
    Rational total_length;              ///< certified upper bound on lambda(K)
    std::vector<CoverInterval> components;  ///< filled only on request
};

/// Incremental enumerator of the levels Sigma_1, Sigma_2, ...
class SumsetEngine {
public:
    /// With track_collisions, every level is kept until the first collision is
    /// found so that the colliding digit strings can be decoded.
    SumsetEngine(const FiniteSigma& sigma, const Rational& q, SumsetOptions options = {},
                 bool track_collisions = false);

    /// Builds the next level. Throws BudgetExceeded when the projected size
    /// exceeds the cap or a scaled value overflows int64; the engine is left at
    /// the last complete level.
    void advance();

    [[nodiscard]] unsigned depth() const noexcept { return depth_; }
    [[nodiscard]] std::uint64_t cardinality() const noexcept { return current_.size(); }
    [[nodiscard]] std::span<const std::int64_t> level() const noexcept { return current_; }
    /// Scale of the current level: r^(depth-1) * L.
    [[nodiscard]] mpz_class scale() const;
    [[nodiscard]] Rational value_at(std::size_t i) const;
    /// |Sigma_n| * q^n at the current depth.
    [[nodiscard]] Rational bound() const;
    [[nodiscard]] const std::optional<DigitCollision>& first_collision() const noexcept { return collision_; }
    [[nodiscard]] unsigned first_collision_depth() const noexcept { return collision_depth_; }

private:
    std::vector<Rational> decode(unsigned level, std::int64_t value) const;
    std::int64_t shift(std::size_t digit, unsigned level) const;

    std::vector<Rational> digits_;
    std::vector<mpz_class> scaled_digits_;  ///< sigma_i * L
    Rational q_;
    mpz_class p_;
    mpz_class r_;
    mpz_class lcm_;
    std::int64_t p64_ = 1;
    SumsetOptions options_;
    bool track_;
    unsigned depth_ = 0;
    std::vector<std::int64_t> current_;
    std::vector<std::vector<std::int64_t>> history_;  ///< levels 1..depth-1 while tracking
    std::optional<DigitCollision> collision_;
    unsigned collision_depth_ = 0;
};

/// Exact Sigma_n as a digit set.
[[nodiscard]] FiniteSigma sigma_n(const FiniteSigma& sigma, const Rational& q, unsigned n,
                                  SumsetOptions options = {});

[[nodiscard]] SumsetReport sumset_report(const FiniteSigma& sigma, const Rational& q, unsigned n,
                                         SumsetOptions options = {});

/// Smallest n <= max_depth with |Sigma_n| q^n < 1, or nullopt.
/// Throws BudgetExceeded if the cap trips first.
[[nodiscard]] std::optional<NullCertificate> null_certificate(const FiniteSigma& sigma, const Rational& q,
                                                              unsigned max_depth, SumsetOptions options = {});

/// Exact length of the union of [x, x + q^n diam K] over x in Sigma_n.
[[nodiscard]] CoverReport cover_length(const FiniteSigma& sigma, const Rational& q, unsigned n,
                                       SumsetOptions options = {}, bool with_components = false);

struct T12Result {
    std::optional<NullCertificate> zero_measure;
    unsigned checked_depth = 0;  ///< no violation up to this depth when zero_measure is empty
    std::vector<std::uint64_t> cardinalities;
};

/// Integer Sigma and q = 1/(k+1): |Sigma_n| q^n < 1 for some n decides lambda(K) = 0.
[[nodiscard]] T12Result t12_check(const FiniteSigma& sigma, const Rational& q, unsigned max_depth,
                                  SumsetOptions options = {});

struct FullSumsetResult {
    std::optional<DigitCollision> collision;
    unsigned collision_depth = 0;
    unsigned checked_depth = 0;
};

/// Integer Sigma at q = 1/|Sigma|: searches for two digit strings with equal value.
[[nodiscard]] FullSumsetResult full_sumset_check(const FiniteSigma& sigma, unsigned max_depth,
                                                 SumsetOptions options = {});

}  // namespace ksigma

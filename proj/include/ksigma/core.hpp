#pragma once

/// @file core.hpp
/// @brief Digit sets, contraction ratios, multigeometric sequences and gap statistics.

#include "ksigma/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ksigma {

/// Sorted finite digit set {sigma_1 < ... < sigma_s}, s >= 2.
class FiniteSigma {
public:
    /// Sorts the input; rejects duplicates and sets with fewer than two elements.
    explicit FiniteSigma(std::vector<Rational> elements);

    /// Comma-separated rationals, e.g. "0,2,3,5" or "1/2,3/4".
    static FiniteSigma parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return elems_[i]; }
    [[nodiscard]] const Rational& front() const { return elems_.front(); }
    [[nodiscard]] const Rational& back() const { return elems_.back(); }
    [[nodiscard]] std::span<const Rational> elements() const noexcept { return elems_; }
    [[nodiscard]] auto begin() const noexcept { return elems_.begin(); }
    [[nodiscard]] auto end() const noexcept { return elems_.end(); }

    [[nodiscard]] bool contains(const Rational& x) const;
    [[nodiscard]] bool is_integral() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const FiniteSigma&, const FiniteSigma&) = default;

private:
    std::vector<Rational> elems_;
};

/// Ratio q is the unique positive root of x + x^2 + ... + x^(n-1) = 1/(s-1).
struct GeometricRootTag {
    unsigned s = 0;
    unsigned n = 0;
    friend bool operator==(const GeometricRootTag&, const GeometricRootTag&) = default;
};

/// Contraction ratio: exact, or a certified enclosure [lo, hi] inside (0, 1).
class RatioValue {
public:
    static RatioValue exact(const Rational& q);
    static RatioValue enclosure(const Rational& lo, const Rational& hi,
                                std::optional<GeometricRootTag> root = std::nullopt);

    [[nodiscard]] bool is_exact() const noexcept { return lo_ == hi_; }
    [[nodiscard]] const Rational& lo() const noexcept { return lo_; }
    [[nodiscard]] const Rational& hi() const noexcept { return hi_; }
    /// Exact value; throws InvalidArgument for a proper enclosure.
    [[nodiscard]] const Rational& value() const;
    [[nodiscard]] Rational width() const { return hi_ - lo_; }
    [[nodiscard]] bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    [[nodiscard]] const std::optional<GeometricRootTag>& root() const noexcept { return root_; }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const RatioValue&, const RatioValue&) = default;

private:
    RatioValue(Rational lo, Rational hi, std::optional<GeometricRootTag> root)
        : lo_(std::move(lo)), hi_(std::move(hi)), root_(root)
    {
    }

    Rational lo_;
    Rational hi_;
    std::optional<GeometricRootTag> root_;
};

/// Three-valued comparison outcome for enclosures.
enum class Tri { False, True, Unknown };

/// Is q >= t?  Exact when q is exact.
[[nodiscard]] Tri at_least(const RatioValue& q, const Rational& t);
/// Is q < t?
[[nodiscard]] Tri below(const RatioValue& q, const Rational& t);

/// (k_0, ..., k_m; q)
struct MultigeometricSpec {
    std::vector<Rational> coefficients;
    RatioValue ratio;

    /// "k0,k1,...,km;q"
    static MultigeometricSpec parse(std::string_view text);
};

/// All subset sums of the coefficients, sorted and deduplicated.
[[nodiscard]] FiniteSigma sumset_of_multigeometric(std::span<const Rational> coeffs);

/// Parses "k0,k1,...,km" as a positive coefficient list.
[[nodiscard]] std::vector<Rational> parse_coefficients(std::string_view text);

struct GapStats {
    Rational diam;
    Rational delta_min;
    Rational delta_max;
    Rational big_i;
    Rational little_i;
    Rational d;
    bool extreme_gap = false;
    /// Indices [first, last] of the contiguous run of Sigma attaining little_i.
    std::pair<std::size_t, std::size_t> hull{0, 0};

    friend bool operator==(const GapStats&, const GapStats&) = default;
};

/// I(B) = Delta(B) / (Delta(B) + diam B) for a sorted set with at least two points.
[[nodiscard]] Rational interval_index(std::span<const Rational> sorted);

[[nodiscard]] GapStats gap_stats(const FiniteSigma& sigma);

/// Minimum of I(B) over every subset B with |B| >= 2, by full enumeration.
/// Refuses |Sigma| > 20.
[[nodiscard]] Rational i_bruteforce(const FiniteSigma& sigma);

}  // namespace ksigma

#include "ksigma/core.hpp"

#include "ksigma/errors.hpp"

#include <algorithm>
#include <set>

namespace ksigma {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

std::vector<Rational> parse_list(std::string_view text)
{
    std::vector<Rational> out;
    for (std::string_view part : split(text, ',')) {
        out.push_back(Rational::parse(part));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteSigma

FiniteSigma::FiniteSigma(std::vector<Rational> elements) : elems_(std::move(elements))
{
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
        throw InvalidArgument("digit set contains duplicate elements");
    }
    if (elems_.size() < 2) {
        throw InvalidArgument("digit set needs at least two elements");
    }
}

FiniteSigma FiniteSigma::parse(std::string_view text)
{
    return FiniteSigma(parse_list(text));
}

bool FiniteSigma::contains(const Rational& x) const
{
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool FiniteSigma::is_integral() const
{
    return std::all_of(elems_.begin(), elems_.end(), [](const Rational& r) { return r.is_integer(); });
}

std::string FiniteSigma::str() const
{
    std::string s;
    for (const Rational& r : elems_) {
        if (!s.empty()) {
            s += ',';
        }
        s += r.str();
    }
    return s;
}

// ---------------------------------------------------------------------------
// RatioValue

RatioValue RatioValue::exact(const Rational& q)
{
    if (q.sign() <= 0 || q >= Rational(1)) {
        throw InvalidArgument("ratio must lie in (0,1), got " + q.str());
    }
    return RatioValue(q, q, std::nullopt);
}

RatioValue RatioValue::enclosure(const Rational& lo, const Rational& hi, std::optional<GeometricRootTag> root)
{
    if (lo.sign() <= 0 || hi >= Rational(1) || hi < lo) {
        throw InvalidArgument("enclosure [" + lo.str() + ", " + hi.str() + "] is not inside (0,1)");
    }
    return RatioValue(lo, hi, root);
}

const Rational& RatioValue::value() const
{
    if (!is_exact()) {
        throw InvalidArgument("ratio is an enclosure, not an exact rational");
    }
    return lo_;
}

std::string RatioValue::str() const
{
    if (is_exact()) {
        return lo_.str();
    }
    return "[" + lo_.str() + ", " + hi_.str() + "]";
}

Tri at_least(const RatioValue& q, const Rational& t)
{
    if (q.lo() >= t) {
        return Tri::True;
    }
    if (q.hi() < t) {
        return Tri::False;
    }
    return Tri::Unknown;
}

Tri below(const RatioValue& q, const Rational& t)
{
    switch (at_least(q, t)) {
    case Tri::True:
        return Tri::False;
    case Tri::False:
        return Tri::True;
    default:
        return Tri::Unknown;
    }
}

// ---------------------------------------------------------------------------
// Multigeometric sequences

std::vector<Rational> parse_coefficients(std::string_view text)
{
    std::vector<Rational> coeffs = parse_list(text);
    for (const Rational& k : coeffs) {
        if (k.sign() <= 0) {
            throw InvalidArgument("multigeometric coefficients must be positive, got " + k.str());
        }
    }
    return coeffs;
}

MultigeometricSpec MultigeometricSpec::parse(std::string_view text)
{
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw InvalidArgument("multigeometric spec must look like 'k0,...,km;q'");
    }
    return MultigeometricSpec{parse_coefficients(text.substr(0, semi)),
                              RatioValue::exact(Rational::parse(text.substr(semi + 1)))};
}

FiniteSigma sumset_of_multigeometric(std::span<const Rational> coeffs)
{
    if (coeffs.empty()) {
        throw InvalidArgument("empty coefficient list");
    }
    std::set<Rational> sums{Rational(0)};
    for (const Rational& k : coeffs) {
        if (k.sign() <= 0) {
            throw InvalidArgument("multigeometric coefficients must be positive, got " + k.str());
        }
        std::set<Rational> next = sums;
        for (const Rational& s : sums) {
            next.insert(s + k);
        }
        sums = std::move(next);
    }
    return FiniteSigma(std::vector<Rational>(sums.begin(), sums.end()));
}

// ---------------------------------------------------------------------------
// Gap statistics

Rational interval_index(std::span<const Rational> sorted)
{
    if (sorted.size() < 2) {
        throw InvalidArgument("I(B) needs at least two points");
    }
    Rational largest = sorted[1] - sorted[0];
    for (std::size_t i = 2; i < sorted.size(); ++i) {
        largest = max(largest, sorted[i] - sorted[i - 1]);
    }
    const Rational diam = sorted.back() - sorted.front();
    return largest / (largest + diam);
}

GapStats gap_stats(const FiniteSigma& sigma)
{
    const auto x = sigma.elements();
    const std::size_t s = x.size();

    GapStats g;
    g.diam = x[s - 1] - x[0];
    g.delta_min = x[1] - x[0];
    g.delta_max = x[1] - x[0];
    for (std::size_t i = 2; i < s; ++i) {
        const Rational gap = x[i] - x[i - 1];
        g.delta_min = min(g.delta_min, gap);
        g.delta_max = max(g.delta_max, gap);
    }
    g.big_i = g.delta_max / (g.delta_max + g.diam);
    g.d = g.delta_min / g.diam;
    g.extreme_gap = (x[1] - x[0]) == g.delta_max || (x[s - 1] - x[s - 2]) == g.delta_max;

    // For fixed endpoints a < b the contiguous run Sigma ∩ [a, b] has the smallest
    // largest gap among subsets with those endpoints, so it minimizes I.
    g.little_i = g.big_i;
    g.hull = {0, s - 1};
    for (std::size_t i = 0; i + 1 < s; ++i) {
        Rational run_max = 0;
        for (std::size_t j = i + 1; j < s; ++j) {
            run_max = max(run_max, x[j] - x[j - 1]);
            const Rational candidate = run_max / (run_max + (x[j] - x[i]));
            if (candidate < g.little_i) {
                g.little_i = candidate;
                g.hull = {i, j};
            }
        }
    }
    return g;
}

Rational i_bruteforce(const FiniteSigma& sigma)
{
    const std::size_t s = sigma.size();
    if (s > 20) {
        throw InvalidArgument("i_bruteforce refuses |Sigma| > 20");
    }
    std::optional<Rational> best;
    std::vector<Rational> subset;
    subset.reserve(s);
    for (unsigned long mask = 0; mask < (1UL << s); ++mask) {
        if (__builtin_popcountl(mask) < 2) {
            continue;
        }
        subset.clear();
        for (std::size_t i = 0; i < s; ++i) {
            if ((mask >> i) & 1UL) {
                subset.push_back(sigma[i]);
            }
        }
        Rational value = interval_index(subset);
        if (!best || value < *best) {
            best = std::move(value);
        }
    }
    return *best;
}

}  // namespace ksigma

#include "ksigma/classify.hpp"

#include "ksigma/errors.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

namespace ksigma {

namespace {

constexpr std::array<std::pair<FactKind, std::string_view>, 6> kFactNames{{
    {FactKind::IsInterval, "IsInterval"},
    {FactKind::NotInterval, "NotInterval"},
    {FactKind::ContainsInterval, "ContainsInterval"},
    {FactKind::NotFiniteUnionOfIntervals, "NotFiniteUnionOfIntervals"},
    {FactKind::ZeroMeasureCantor, "ZeroMeasureCantor"},
    {FactKind::AePositiveWindowMember, "AePositiveWindowMember"},
}};

constexpr std::array<std::pair<Trichotomy, std::string_view>, 3> kTrichotomyNames{{
    {Trichotomy::FiniteUnionOfIntervals, "FiniteUnionOfIntervals"},
    {Trichotomy::CantorSet, "CantorSet"},
    {Trichotomy::Cantorval, "Cantorval"},
}};

std::optional<Certificate> zero_measure_certificate(const FiniteSigma& sigma, const RatioValue& q,
                                                    const ClassifyOptions& options, bool& budget_exhausted)
{
    const auto s = static_cast<long>(sigma.size());
    if (q.is_exact()) {
        try {
            if (auto cert = null_certificate(sigma, q.value(), options.depth_budget, options.sumset)) {
                return make_certificate(*cert);
            }
        } catch (const BudgetExceeded&) {
            budget_exhausted = true;
        }
        return std::nullopt;
    }
    // |Sigma_1| q^1 < 1 holds on the whole enclosure once it holds at the top end.
    const Rational bound = Rational(s) * q.hi();
    if (bound < Rational(1)) {
        return Certificate{TheoremTag::SumsetNullBound,
                           SumsetNullWitness{1, static_cast<std::uint64_t>(s), q.hi(), false, bound}};
    }
    if (const auto& root = q.root(); root && root->s == sigma.size()) {
        if (const auto w = star_condition_witness(sigma)) {
            try {
                if (auto cert = qn_certificate(sigma, *w, root->n, options.tolerance)) {
                    return make_certificate(*cert);
                }
            } catch (const BudgetExceeded&) {
                budget_exhausted = true;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(FactKind kind)
{
    for (const auto& [k, name] : kFactNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

std::string_view to_string(Trichotomy t)
{
    for (const auto& [k, name] : kTrichotomyNames) {
        if (k == t) {
            return name;
        }
    }
    return "unknown";
}

FactKind fact_kind_from_string(std::string_view text)
{
    for (const auto& [k, name] : kFactNames) {
        if (name == text) {
            return k;
        }
    }
    throw InvalidArgument("unknown fact kind '" + std::string(text) + "'");
}

Trichotomy trichotomy_from_string(std::string_view text)
{
    for (const auto& [k, name] : kTrichotomyNames) {
        if (name == text) {
            return k;
        }
    }
    throw InvalidArgument("unknown trichotomy label '" + std::string(text) + "'");
}

bool Verdict::has(FactKind kind) const
{
    return find(kind) != nullptr;
}

const Fact* Verdict::find(FactKind kind) const
{
    const auto it = std::find_if(facts.begin(), facts.end(), [kind](const Fact& f) { return f.kind == kind; });
    return it == facts.end() ? nullptr : &*it;
}

std::optional<AeWindow> ae_positive_window(const FiniteSigma& sigma, const Rational& tol)
{
    const GapStats g = gap_stats(sigma);
    if (g.d > Rational(1, 2)) {
        return std::nullopt;
    }
    const Rational lo(1, static_cast<long>(sigma.size()));
    Rational t = tol;
    for (int attempt = 0; attempt < 8; ++attempt) {
        AlphaBound alpha = alpha_lower(g.d, t);
        if (alpha.value.lo() > lo) {
            return AeWindow{lo, std::move(alpha)};
        }
        if (alpha.value.hi() <= lo) {
            return std::nullopt;
        }
        t /= Rational(1024);
    }
    return std::nullopt;
}

bool is_ferens_like(const FiniteSigma& sigma)
{
    const std::size_t size = sigma.size();
    if (size < 4) {
        return false;
    }
    const GapStats g = gap_stats(sigma);
    std::vector<Rational> t;
    for (const Rational& x : sigma) {
        t.push_back((x - sigma.front()) / g.delta_min);
        if (!t.back().is_integer()) {
            return false;
        }
    }
    const Rational& k = t[1];
    const Rational& n = t.back();
    for (std::size_t i = 1; i + 1 < size; ++i) {
        if (t[i] != k + Rational(static_cast<long>(i - 1))) {
            return false;
        }
    }
    return t[size - 2] == n - k;
}

Verdict classify(const FiniteSigma& sigma, const RatioValue& q, const ClassifyOptions& options)
{
    if (options.depth_budget == 0) {
        throw InvalidArgument("depth budget must be positive");
    }
    if (q.width() > options.max_enclosure_width) {
        throw InvalidArgument("ratio enclosure width " + q.width().str() + " exceeds the maximum " +
                              options.max_enclosure_width.str());
    }
    const GapStats g = gap_stats(sigma);
    Verdict v{sigma, q, {}, std::nullopt, false, false};

    const Tri interval = at_least(q, g.big_i);
    if (interval == Tri::True) {
        v.facts.push_back({FactKind::IsInterval,
                           {TheoremTag::IntervalThreshold, ThresholdWitness{q.lo(), g.delta_max, g.diam, g.big_i}}});
    } else if (interval == Tri::False) {
        v.facts.push_back(
            {FactKind::NotInterval,
             {TheoremTag::BelowIntervalThreshold, ThresholdWitness{q.hi(), g.delta_max, g.diam, g.big_i}}});
    }

    const Tri contains = at_least(q, g.little_i);
    if (contains == Tri::True) {
        const auto first = sigma.elements().begin() + static_cast<std::ptrdiff_t>(g.hull.first);
        const auto last = sigma.elements().begin() + static_cast<std::ptrdiff_t>(g.hull.second) + 1;
        v.facts.push_back({FactKind::ContainsInterval,
                           {TheoremTag::HullSubset, HullWitness{q.lo(), std::vector<Rational>(first, last), g.little_i}}});
    }

    if (interval == Tri::False && g.extreme_gap) {
        const std::size_t s = sigma.size();
        const bool left = sigma[1] - sigma[0] == g.delta_max;
        const Rational& gap_lo = left ? sigma[0] : sigma[s - 2];
        const Rational& gap_hi = left ? sigma[1] : sigma[s - 1];
        v.facts.push_back({FactKind::NotFiniteUnionOfIntervals,
                           {TheoremTag::ExtremeGap,
                            ExtremeGapWitness{q.hi(), g.delta_max, g.diam, g.big_i, gap_lo, gap_hi}}});
    }

    if (contains != Tri::True) {
        if (auto cert = zero_measure_certificate(sigma, q, options, v.budget_exhausted)) {
            v.facts.push_back({FactKind::ZeroMeasureCantor, std::move(*cert)});
        }
    }

    // The a.e. window is an annotation for q not otherwise settled.
    if (contains != Tri::True && !v.has(FactKind::ZeroMeasureCantor)) {
        if (const auto window = ae_positive_window(sigma, options.tolerance)) {
            if (q.lo() > window->lo && q.hi() < window->alpha.value.lo()) {
                v.facts.push_back({FactKind::AePositiveWindowMember,
                                   {TheoremTag::AeWindow,
                                    WindowWitness{window->lo, window->alpha.value.lo(), window->alpha.value.hi(),
                                                  window->alpha.branch, g.d, q.lo(), q.hi()}}});
            }
        }
    }

    std::stable_sort(v.facts.begin(), v.facts.end(),
                     [](const Fact& a, const Fact& b) { return static_cast<int>(a.kind) < static_cast<int>(b.kind); });

    if (v.has(FactKind::IsInterval)) {
        v.trichotomy = Trichotomy::FiniteUnionOfIntervals;
    } else if (v.has(FactKind::ZeroMeasureCantor)) {
        v.trichotomy = Trichotomy::CantorSet;
    } else if (v.has(FactKind::ContainsInterval) && v.has(FactKind::NotFiniteUnionOfIntervals)) {
        v.trichotomy = Trichotomy::Cantorval;
        v.caveat = !options.achievement_set && !is_ferens_like(sigma);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Sweep

std::vector<int> verdict_signature(const Verdict& v)
{
    std::vector<int> sig;
    for (const Fact& f : v.facts) {
        sig.push_back(static_cast<int>(f.kind));
    }
    sig.push_back(v.trichotomy ? 100 + static_cast<int>(*v.trichotomy) : -1);
    return sig;
}

std::vector<Rational> SweepResult::boundaries() const
{
    std::vector<const SweepCell*> effective;
    for (const SweepCell& c : cells) {
        if (!c.exceptional) {
            effective.push_back(&c);
        }
    }
    std::vector<Rational> out;
    for (std::size_t k = 1; k < effective.size(); ++k) {
        if (verdict_signature(effective[k - 1]->verdict) != verdict_signature(effective[k]->verdict)) {
            const Rational& p = effective[k]->lo;
            if (out.empty() || out.back() != p) {
                out.push_back(p);
            }
        }
    }
    return out;
}

std::vector<Rational> SweepResult::exceptional_points() const
{
    std::vector<Rational> out;
    for (const SweepCell& c : cells) {
        if (c.exceptional) {
            out.push_back(c.lo);
        }
    }
    return out;
}

SweepResult sweep(const FiniteSigma& sigma, unsigned resolution, const ClassifyOptions& options)
{
    if (resolution == 0) {
        throw InvalidArgument("sweep resolution must be positive");
    }
    const GapStats g = gap_stats(sigma);
    SweepResult result{sigma, resolution, {}, ae_positive_window(sigma, options.tolerance), {}};

    std::set<Rational> critical{Rational(1, static_cast<long>(sigma.size())), g.little_i, g.big_i};
    if (result.window) {
        critical.insert(result.window->alpha.value.lo());
    }
    std::set<Rational> points;
    for (const Rational& p : critical) {
        if (p.sign() > 0 && p < Rational(1)) {
            result.critical_points.push_back(p);
            points.insert(p);
        }
    }
    for (unsigned k = 1; k < resolution; ++k) {
        points.insert(Rational(static_cast<long>(k), static_cast<long>(resolution)));
    }

    std::vector<SweepCell> raw;
    Rational prev = 0;
    auto add_cell = [&](const Rational& lo, const Rational& hi, bool closed) {
        const Rational rep = closed ? lo : midpoint(lo, hi);
        raw.push_back(SweepCell{lo, hi, closed, closed, rep, classify(sigma, RatioValue::exact(rep), options), false});
    };
    for (const Rational& p : points) {
        add_cell(prev, p, false);
        add_cell(p, p, true);
        prev = p;
    }
    add_cell(prev, Rational(1), false);

    for (SweepCell& c : raw) {
        if (!result.cells.empty() &&
            verdict_signature(result.cells.back().verdict) == verdict_signature(c.verdict)) {
            result.cells.back().hi = c.hi;
            result.cells.back().hi_closed = c.hi_closed;
        } else {
            result.cells.push_back(std::move(c));
        }
    }
    for (std::size_t k = 1; k + 1 < result.cells.size(); ++k) {
        SweepCell& c = result.cells[k];
        c.exceptional = c.is_point() && verdict_signature(result.cells[k - 1].verdict) ==
                                            verdict_signature(result.cells[k + 1].verdict);
    }
    return result;
}

}  // namespace ksigma

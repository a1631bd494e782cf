#include "ksigma/serialize.hpp"

#include "ksigma/errors.hpp"

#include <sstream>

namespace ksigma {

namespace {

json rational_list(const std::vector<Rational>& values)
{
    json arr = json::array();
    for (const Rational& r : values) {
        arr.push_back(r.str());
    }
    return arr;
}

std::vector<Rational> rational_list_from(const json& j)
{
    std::vector<Rational> out;
    for (const json& e : j) {
        out.push_back(rational_from_json(e));
    }
    return out;
}

std::string_view branch_name(AlphaBranch b)
{
    return b == AlphaBranch::ClosedForm ? "closed_form" : "cubic";
}

AlphaBranch branch_from(const std::string& s)
{
    if (s == "closed_form") {
        return AlphaBranch::ClosedForm;
    }
    if (s == "cubic") {
        return AlphaBranch::Cubic;
    }
    throw InvalidArgument("unknown alpha branch '" + s + "'");
}

struct WitnessWriter {
    json operator()(const ThresholdWitness& w) const
    {
        return {{"q_bound", w.q_bound.str()},
                {"delta_max", w.delta_max.str()},
                {"diam", w.diam.str()},
                {"big_i", w.big_i.str()}};
    }
    json operator()(const HullWitness& w) const
    {
        return {{"q_lower", w.q_lower.str()}, {"subset", rational_list(w.subset)}, {"little_i", w.little_i.str()}};
    }
    json operator()(const ExtremeGapWitness& w) const
    {
        return {{"q_upper", w.q_upper.str()},
                {"delta_max", w.delta_max.str()},
                {"diam", w.diam.str()},
                {"big_i", w.big_i.str()},
                {"gap", json::array({w.gap_lo.str(), w.gap_hi.str()})}};
    }
    json operator()(const SumsetNullWitness& w) const
    {
        return {{"depth", w.depth},
                {"cardinality", w.cardinality},
                {"q", w.q_upper.str()},
                {"q_exact", w.q_exact},
                {"bound", w.bound.str()}};
    }
    json operator()(const CollapsedNullWitness& w) const
    {
        return {{"s", w.s},
                {"n", w.n},
                {"q_lo", w.q_lo.str()},
                {"q_hi", w.q_hi.str()},
                {"a", w.abc.a.str()},
                {"b", w.abc.b.str()},
                {"c", w.abc.c.str()},
                {"collapsed_bound", w.collapsed_bound.str()}};
    }
    json operator()(const CollisionWitness& w) const
    {
        return {{"s", w.s},
                {"depth", w.first.size()},
                {"first", rational_list(w.first)},
                {"second", rational_list(w.second)}};
    }
    json operator()(const WindowWitness& w) const
    {
        return {{"window_lo", w.window_lo.str()},
                {"alpha_lo", w.alpha_lo.str()},
                {"alpha_hi", w.alpha_hi.str()},
                {"branch", branch_name(w.branch)},
                {"d", w.d.str()},
                {"q_lower", w.q_lower.str()},
                {"q_upper", w.q_upper.str()}};
    }
};

Rational r_at(const json& w, const char* key)
{
    if (!w.contains(key)) {
        throw InvalidArgument(std::string("witness is missing '") + key + "'");
    }
    return rational_from_json(w.at(key));
}

}  // namespace

json rational_json(const Rational& r)
{
    return r.str();
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw InvalidArgument("expected a rational string, got " + j.dump());
}

json to_json(const FiniteSigma& sigma)
{
    return rational_list(std::vector<Rational>(sigma.begin(), sigma.end()));
}

FiniteSigma sigma_from_json(const json& j)
{
    if (j.is_object() && j.contains("sigma")) {
        return sigma_from_json(j.at("sigma"));
    }
    if (!j.is_array()) {
        throw InvalidArgument("digit set JSON must be an array of rational strings");
    }
    return FiniteSigma(rational_list_from(j));
}

json to_json(const RatioValue& q)
{
    json j{{"lo", q.lo().str()},
           {"hi", q.hi().str()},
           {"exact", q.is_exact()},
           {"decimal", q.lo().decimal(kDecimalDigits)}};
    if (q.root()) {
        j["root"] = {{"s", q.root()->s}, {"n", q.root()->n}};
    }
    return j;
}

json to_json(const GapStats& g)
{
    return {{"schema", "gapstats/v1"},
            {"diam", g.diam.str()},
            {"delta_min", g.delta_min.str()},
            {"delta_max", g.delta_max.str()},
            {"big_i", g.big_i.str()},
            {"little_i", g.little_i.str()},
            {"d", g.d.str()},
            {"extreme_gap", g.extreme_gap},
            {"big_i_decimal", g.big_i.decimal(kDecimalDigits)},
            {"little_i_decimal", g.little_i.decimal(kDecimalDigits)}};
}

json to_json(const Certificate& c)
{
    return {{"theorem_tag", to_string(c.tag)}, {"witnesses", std::visit(WitnessWriter{}, c.witness)}};
}

Certificate certificate_from_json(const json& j)
{
    const TheoremTag tag = theorem_tag_from_string(j.at("theorem_tag").get<std::string>());
    const json& w = j.at("witnesses");
    switch (tag) {
    case TheoremTag::IntervalThreshold:
    case TheoremTag::BelowIntervalThreshold:
        return {tag, ThresholdWitness{r_at(w, "q_bound"), r_at(w, "delta_max"), r_at(w, "diam"), r_at(w, "big_i")}};
    case TheoremTag::HullSubset:
        return {tag, HullWitness{r_at(w, "q_lower"), rational_list_from(w.at("subset")), r_at(w, "little_i")}};
    case TheoremTag::ExtremeGap: {
        const json& gap = w.at("gap");
        if (!gap.is_array() || gap.size() != 2) {
            throw InvalidArgument("extreme gap witness needs a two-element 'gap'");
        }
        return {tag, ExtremeGapWitness{r_at(w, "q_upper"), r_at(w, "delta_max"), r_at(w, "diam"), r_at(w, "big_i"),
                                       rational_from_json(gap[0]), rational_from_json(gap[1])}};
    }
    case TheoremTag::SumsetNullBound:
        return {tag, SumsetNullWitness{w.at("depth").get<unsigned>(), w.at("cardinality").get<std::uint64_t>(),
                                       r_at(w, "q"), w.at("q_exact").get<bool>(), r_at(w, "bound")}};
    case TheoremTag::CollapsedNullBound:
        return {tag, CollapsedNullWitness{w.at("s").get<unsigned>(), w.at("n").get<unsigned>(), r_at(w, "q_lo"),
                                          r_at(w, "q_hi"), StarConditionWitness{r_at(w, "a"), r_at(w, "b"), r_at(w, "c")},
                                          r_at(w, "collapsed_bound")}};
    case TheoremTag::DigitCollision:
        return {tag, CollisionWitness{w.at("s").get<unsigned>(), rational_list_from(w.at("first")),
                                      rational_list_from(w.at("second"))}};
    case TheoremTag::AeWindow:
        return {tag, WindowWitness{r_at(w, "window_lo"), r_at(w, "alpha_lo"), r_at(w, "alpha_hi"),
                                   branch_from(w.at("branch").get<std::string>()), r_at(w, "d"), r_at(w, "q_lower"),
                                   r_at(w, "q_upper")}};
    }
    throw InvalidArgument("unhandled theorem tag");
}

json to_json(const Fact& f)
{
    json c = to_json(f.certificate);
    return {{"kind", to_string(f.kind)}, {"theorem_tag", c["theorem_tag"]}, {"witnesses", c["witnesses"]}};
}

json to_json(const Verdict& v)
{
    json facts = json::array();
    for (const Fact& f : v.facts) {
        facts.push_back(to_json(f));
    }
    return {{"schema", "verdict/v1"},
            {"sigma", to_json(v.sigma)},
            {"q", to_json(v.q)},
            {"facts", facts},
            {"trichotomy", v.trichotomy ? json(to_string(*v.trichotomy)) : json(nullptr)},
            {"caveat", v.caveat},
            {"budget_exhausted", v.budget_exhausted}};
}

json to_json(const SumsetReport& r)
{
    json j{{"schema", "sumset/v1"},
           {"depth", r.depth},
           {"cardinality", r.cardinality},
           {"bound", r.bound.str()},
           {"bound_decimal", r.bound.decimal(kDecimalDigits)}};
    if (r.first_collision) {
        j["first_collision"] = {{"first", rational_list(r.first_collision->first)},
                                {"second", rational_list(r.first_collision->second)},
                                {"value", r.first_collision->value.str()}};
    } else {
        j["first_collision"] = nullptr;
    }
    return j;
}

json to_json(const NullCertificate& c)
{
    return {{"depth", c.depth},
            {"cardinality", c.cardinality},
            {"q", c.q.str()},
            {"bound", c.bound.str()},
            {"bound_decimal", c.bound.decimal(kDecimalDigits)},
            {"certificate", to_json(make_certificate(c))}};
}

json to_json(const CoverReport& r)
{
    return {{"schema", "cover/v1"},
            {"depth", r.depth},
            {"cover_intervals", r.cover_intervals},
            {"component_count", r.component_count},
            {"piece_length", r.piece_length.str()},
            {"diam_k", r.diam_k.str()},
            {"total_length", r.total_length.str()},
            {"total_length_decimal", r.total_length.decimal(kDecimalDigits)}};
}

json to_json(const AlphaBound& a)
{
    return {{"schema", "alpha/v1"},
            {"kind", "lower bound"},
            {"d", a.d.str()},
            {"branch", branch_name(a.branch)},
            {"exact", a.value.is_exact()},
            {"lo", a.value.lo().str()},
            {"hi", a.value.hi().str()},
            {"decimal", a.value.lo().decimal(kDecimalDigits)}};
}

json to_json(const QnCertificate& c)
{
    return {{"s", c.s},
            {"n", c.n},
            {"q_lo", c.q_enclosure.lo().str()},
            {"q_hi", c.q_enclosure.hi().str()},
            {"q_decimal", c.q_enclosure.lo().decimal(kDecimalDigits)},
            {"collapsed_bound", c.collapsed_bound.str()},
            {"collapsed_bound_decimal", c.collapsed_bound.decimal(kDecimalDigits)},
            {"certificate", to_json(make_certificate(c))}};
}

json to_json(const T12Result& r)
{
    json j{{"schema", "t12/v1"},
           {"result", r.zero_measure ? "ZeroMeasure" : "NoViolationUpTo"},
           {"depth", r.checked_depth},
           {"cardinalities", r.cardinalities}};
    if (r.zero_measure) {
        j["null_certificate"] = to_json(*r.zero_measure);
    }
    return j;
}

json to_json(const FullSumsetResult& r, unsigned s)
{
    json j{{"schema", "fullsumset/v1"},
           {"s", s},
           {"result", r.collision ? "Collision" : "NoCollisionUpTo"},
           {"depth", r.collision ? r.collision_depth : r.checked_depth}};
    if (r.collision) {
        j["certificate"] = to_json(make_certificate(*r.collision, s));
    }
    return j;
}

json to_json(const SweepResult& r)
{
    json cells = json::array();
    for (const SweepCell& c : r.cells) {
        cells.push_back({{"lo", c.lo.str()},
                         {"hi", c.hi.str()},
                         {"lo_closed", c.lo_closed},
                         {"hi_closed", c.hi_closed},
                         {"representative", c.representative.str()},
                         {"exceptional", c.exceptional},
                         {"verdict", to_json(c.verdict)}});
    }
    json window = nullptr;
    if (r.window) {
        window = {{"lo", r.window->lo.str()},
                  {"alpha_lo", r.window->alpha.value.lo().str()},
                  {"alpha_hi", r.window->alpha.value.hi().str()},
                  {"note", "a.e. annotation, not per-point certificate"}};
    }
    return {{"schema", "sweep/v1"},
            {"sigma", to_json(r.sigma)},
            {"resolution", r.resolution},
            {"critical_points", rational_list(r.critical_points)},
            {"window", window},
            {"boundaries", rational_list(r.boundaries())},
            {"exceptional_points", rational_list(r.exceptional_points())},
            {"cells", cells}};
}

json to_json(const StarMinimum& m)
{
    return {{"x_lo", m.x_star.lo.str()},
            {"x_hi", m.x_star.hi.str()},
            {"min_lo", m.min_value.lo.str()},
            {"min_hi", m.min_value.hi.str()},
            {"x_decimal", m.x_star.lo.decimal(kDecimalDigits)},
            {"min_decimal", m.min_value.hi.decimal(kDecimalDigits)}};
}

std::string cover_csv(const CoverReport& r)
{
    std::ostringstream out;
    out << "lo,hi\n";
    for (const CoverInterval& c : r.components) {
        out << c.lo.str() << ',' << c.hi.str() << '\n';
    }
    return out.str();
}

}  // namespace ksigma

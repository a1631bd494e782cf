#include "ksigma/render.hpp"

#include "ksigma/errors.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace ksigma {

namespace {

constexpr std::array<std::pair<SegmentLabel, std::string_view>, 5> kLabelNames{{
    {SegmentLabel::ZeroMeasure, "C0"},
    {SegmentLabel::AePositive, "lambda+"},
    {SegmentLabel::Cantorval, "MC"},
    {SegmentLabel::Interval, "I"},
    {SegmentLabel::Unknown, "unknown"},
}};

constexpr std::array<std::pair<MarkStyle, std::string_view>, 3> kStyleNames{{
    {MarkStyle::Solid, "solid"},
    {MarkStyle::Hollow, "hollow"},
    {MarkStyle::Bold, "bold"},
}};

constexpr double kWidth = 960;
constexpr double kHeight = 220;
constexpr double kLeft = 40;
constexpr double kRight = 920;
constexpr double kAxisY = 110;

std::string fmt(double v)
{
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return buf.data();
}

std::string svg_label(SegmentLabel label)
{
    switch (label) {
    case SegmentLabel::ZeroMeasure:
        return "C&#8320;";
    case SegmentLabel::AePositive:
        return "&#955;&#8314;";
    case SegmentLabel::Cantorval:
        return "MC";
    case SegmentLabel::Interval:
        return "I";
    case SegmentLabel::Unknown:
        break;
    }
    return "?";
}

std::string_view fill_of(SegmentLabel label)
{
    switch (label) {
    case SegmentLabel::ZeroMeasure:
        return "#4c72b0";
    case SegmentLabel::Cantorval:
        return "#dd8452";
    case SegmentLabel::Interval:
        return "#55a868";
    case SegmentLabel::AePositive:
    case SegmentLabel::Unknown:
        break;
    }
    return "#bbbbbb";
}

MarkStyle style_for(SegmentLabel label)
{
    switch (label) {
    case SegmentLabel::ZeroMeasure:
        return MarkStyle::Hollow;
    case SegmentLabel::Interval:
        return MarkStyle::Bold;
    default:
        return MarkStyle::Solid;
    }
}

const Segment* segment_at(const std::vector<Segment>& segments, const Rational& q)
{
    for (const Segment& s : segments) {
        const bool after_lo = s.lo < q || (s.lo == q && s.lo_closed);
        const bool before_hi = q < s.hi || (q == s.hi && s.hi_closed);
        if (after_lo && before_hi) {
            return &s;
        }
    }
    return nullptr;
}

}  // namespace

std::string_view to_string(SegmentLabel label)
{
    for (const auto& [k, name] : kLabelNames) {
        if (k == label) {
            return name;
        }
    }
    return "unknown";
}

std::string_view to_string(MarkStyle style)
{
    for (const auto& [k, name] : kStyleNames) {
        if (k == style) {
            return name;
        }
    }
    return "solid";
}

SegmentLabel segment_label_from_string(std::string_view text)
{
    for (const auto& [k, name] : kLabelNames) {
        if (name == text) {
            return k;
        }
    }
    throw InvalidArgument("unknown segment label '" + std::string(text) + "'");
}

MarkStyle mark_style_from_string(std::string_view text)
{
    for (const auto& [k, name] : kStyleNames) {
        if (name == text) {
            return k;
        }
    }
    throw InvalidArgument("unknown mark style '" + std::string(text) + "'");
}

std::vector<Rational> DiagramSpec::boundaries() const
{
    std::vector<Rational> out;
    for (std::size_t k = 1; k < segments.size(); ++k) {
        if (segments[k - 1].label == segments[k].label) {
            continue;
        }
        for (const Rational* p : {&segments[k - 1].hi, &segments[k].lo}) {
            if (out.empty() || out.back() < *p) {
                out.push_back(*p);
            }
        }
    }
    return out;
}

SegmentLabel label_of(const Verdict& v)
{
    if (v.trichotomy) {
        switch (*v.trichotomy) {
        case Trichotomy::CantorSet:
            return SegmentLabel::ZeroMeasure;
        case Trichotomy::Cantorval:
            return SegmentLabel::Cantorval;
        case Trichotomy::FiniteUnionOfIntervals:
            return SegmentLabel::Interval;
        }
    }
    if (v.has(FactKind::AePositiveWindowMember)) {
        return SegmentLabel::AePositive;
    }
    return SegmentLabel::Unknown;
}

DiagramSpec diagram_from_sweep(const SweepResult& sweep)
{
    DiagramSpec spec;
    for (std::size_t k = 0; k < sweep.cells.size(); ++k) {
        const SweepCell& c = sweep.cells[k];
        if (c.hi < c.lo) {
            throw InvalidArgument("sweep cell with hi < lo");
        }
        if (k > 0) {
            const SweepCell& prev = sweep.cells[k - 1];
            if (c.lo < prev.hi || (c.lo == prev.hi && c.lo_closed && prev.hi_closed)) {
                throw InvalidArgument("sweep cells overlap at " + c.lo.str());
            }
        }
        const SegmentLabel label = label_of(c.verdict);
        if (!spec.segments.empty() && spec.segments.back().label == label && !c.exceptional) {
            spec.segments.back().hi = c.hi;
            spec.segments.back().hi_closed = c.hi_closed;
        } else {
            spec.segments.push_back(Segment{c.lo, c.hi, c.lo_closed, c.hi_closed, label});
        }
    }

    std::set<Rational> points;
    for (const Rational& p : spec.boundaries()) {
        points.insert(p);
    }
    for (const Rational& p : sweep.exceptional_points()) {
        points.insert(p);
    }
    for (const Rational& p : points) {
        if (p.sign() <= 0 || p >= Rational(1)) {
            continue;
        }
        const Segment* owner = segment_at(spec.segments, p);
        const MarkStyle style = owner ? style_for(owner->label) : MarkStyle::Solid;
        spec.marks.push_back(Mark{p, style, p.decimal(4)});
    }
    return spec;
}

json to_json(const DiagramSpec& spec)
{
    json segments = json::array();
    for (const Segment& s : spec.segments) {
        segments.push_back({{"lo", s.lo.str()},
                            {"hi", s.hi.str()},
                            {"lo_closed", s.lo_closed},
                            {"hi_closed", s.hi_closed},
                            {"label", to_string(s.label)}});
    }
    json marks = json::array();
    for (const Mark& m : spec.marks) {
        marks.push_back({{"q", m.q.str()}, {"style", to_string(m.style)}, {"caption", m.caption}});
    }
    json boundaries = json::array();
    for (const Rational& b : spec.boundaries()) {
        boundaries.push_back(b.str());
    }
    return {{"schema", "diagram/v1"}, {"segments", segments}, {"marks", marks}, {"boundaries", boundaries}};
}

DiagramSpec diagram_from_json(const json& j)
{
    DiagramSpec spec;
    for (const json& s : j.at("segments")) {
        spec.segments.push_back(Segment{rational_from_json(s.at("lo")), rational_from_json(s.at("hi")),
                                        s.value("lo_closed", false), s.value("hi_closed", false),
                                        segment_label_from_string(s.at("label").get<std::string>())});
    }
    for (const json& m : j.at("marks")) {
        spec.marks.push_back(Mark{rational_from_json(m.at("q")),
                                  mark_style_from_string(m.at("style").get<std::string>()),
                                  m.value("caption", std::string())});
    }
    return spec;
}

std::string svg_string(const DiagramSpec& spec)
{
    std::set<Rational> points{Rational(0), Rational(1)};
    for (const Segment& s : spec.segments) {
        points.insert(s.lo);
        points.insert(s.hi);
    }
    for (const Mark& m : spec.marks) {
        points.insert(m.q);
    }
    const std::vector<Rational> ordered(points.begin(), points.end());
    auto x_of = [&](const Rational& q) {
        const auto k = static_cast<double>(std::lower_bound(ordered.begin(), ordered.end(), q) - ordered.begin());
        return kLeft + k * (kRight - kLeft) / static_cast<double>(ordered.size() - 1);
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kWidth) << "\" height=\""
        << fmt(kHeight) << "\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(kHeight) << "\">\n"
        << "<defs><pattern id=\"ae\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#8172b2\" "
           "stroke-width=\"2\"/></pattern></defs>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(kHeight)
        << "\" fill=\"white\"/>\n"
        << "<g id=\"segments\">\n";
    for (const Segment& s : spec.segments) {
        if (s.lo == s.hi) {
            continue;
        }
        const double x0 = x_of(s.lo);
        const double x1 = x_of(s.hi);
        const std::string label(to_string(s.label));
        if (s.label == SegmentLabel::AePositive) {
            out << "<rect class=\"annotation\" data-label=\"" << label << "\" x=\"" << fmt(x0) << "\" y=\""
                << fmt(kAxisY - 34) << "\" width=\"" << fmt(x1 - x0) << "\" height=\"14\" fill=\"url(#ae)\" "
                << "stroke=\"#8172b2\" stroke-dasharray=\"4 2\"/>\n";
        } else {
            out << "<rect class=\"certified\" data-label=\"" << label << "\" x=\"" << fmt(x0) << "\" y=\""
                << fmt(kAxisY - 6) << "\" width=\"" << fmt(x1 - x0) << "\" height=\"12\" fill=\"" << fill_of(s.label)
                << "\" fill-opacity=\"0.6\"/>\n";
        }
        out << "<text x=\"" << fmt((x0 + x1) / 2) << "\" y=\"" << fmt(kAxisY - 42)
            << "\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"16\">" << svg_label(s.label)
            << "</text>\n";
    }
    out << "</g>\n<g id=\"axis\">\n"
        << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kAxisY) << "\" x2=\"" << fmt(kRight) << "\" y2=\""
        << fmt(kAxisY) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (const Rational& p : ordered) {
        const double x = x_of(p);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kAxisY - 4) << "\" x2=\"" << fmt(x) << "\" y2=\""
            << fmt(kAxisY + 4) << "\" stroke=\"black\"/>\n"
            << "<text class=\"tick\" x=\"" << fmt(x) << "\" y=\"" << fmt(kAxisY + 24)
            << "\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"13\">" << p.str() << "</text>\n";
    }
    out << "</g>\n<g id=\"marks\">\n";
    for (const Mark& m : spec.marks) {
        const double x = x_of(m.q);
        const char* fill = m.style == MarkStyle::Hollow ? "white" : "black";
        const char* radius = m.style == MarkStyle::Bold ? "6" : "4";
        out << "<circle class=\"" << to_string(m.style) << "\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(kAxisY)
            << "\" r=\"" << radius << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        if (!m.caption.empty()) {
            out << "<text class=\"caption\" x=\"" << fmt(x) << "\" y=\"" << fmt(kAxisY + 42)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#555555\">"
                << m.caption << "</text>\n";
        }
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

void render_svg(const DiagramSpec& spec, const std::string& path)
{
    std::filesystem::path svg(path);
    std::filesystem::path sidecar = svg;
    sidecar.replace_extension(".json");
    if (sidecar == svg) {
        sidecar += ".json";
    }
    std::ofstream out(svg, std::ios::binary);
    out << svg_string(spec);
    if (!out) {
        throw IoError("cannot write " + svg.string());
    }
    std::ofstream side(sidecar, std::ios::binary);
    side << to_json(spec).dump(2) << '\n';
    if (!side) {
        throw IoError("cannot write " + sidecar.string());
    }
}

std::string cover_svg(const CoverReport& report)
{
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kWidth)
        << "\" height=\"80.00\" viewBox=\"0 0 " << fmt(kWidth) << " 80.00\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kWidth) << "\" height=\"80.00\" fill=\"white\"/>\n";
    if (!report.components.empty()) {
        const Rational lo = report.components.front().lo;
        const Rational span = report.components.back().hi - lo;
        const double scale = (kRight - kLeft) / span.to_double();
        out << "<g id=\"cover\">\n";
        for (const CoverInterval& c : report.components) {
            const double x0 = kLeft + (c.lo - lo).to_double() * scale;
            const double w = (c.hi - c.lo).to_double() * scale;
            out << "<rect x=\"" << fmt(x0) << "\" y=\"30.00\" width=\"" << fmt(std::max(w, 0.5))
                << "\" height=\"20.00\" fill=\"#4c72b0\"/>\n";
        }
        out << "</g>\n"
            << "<text x=\"" << fmt(kLeft) << "\" y=\"70.00\" font-family=\"serif\" font-size=\"12\">" << lo.str()
            << "</text>\n"
            << "<text x=\"" << fmt(kRight) << "\" y=\"70.00\" text-anchor=\"end\" font-family=\"serif\" "
               "font-size=\"12\">"
            << report.components.back().hi.str() << "</text>\n";
    }
    out << "<text x=\"" << fmt(kLeft) << "\" y=\"18.00\" font-family=\"sans-serif\" font-size=\"12\">depth "
        << report.depth << ", total length " << report.total_length.str() << "</text>\n</svg>\n";
    return out.str();
}

}  // namespace ksigma

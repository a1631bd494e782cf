#pragma once

/// @file render.hpp
/// @brief Schematic q-axis diagrams and cover pictures as SVG 1.1.

#include "ksigma/classify.hpp"
#include "ksigma/rational.hpp"
#include "ksigma/serialize.hpp"
#include "ksigma/sumsets.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ksigma {

enum class SegmentLabel { ZeroMeasure, AePositive, Cantorval, Interval, Unknown };
enum class MarkStyle { Solid, Hollow, Bold };

/// "C0", "lambda+", "MC", "I", "unknown"
[[nodiscard]] std::string_view to_string(SegmentLabel label);
[[nodiscard]] std::string_view to_string(MarkStyle style);
[[nodiscard]] SegmentLabel segment_label_from_string(std::string_view text);
[[nodiscard]] MarkStyle mark_style_from_string(std::string_view text);

struct Segment {
    Rational lo;
    Rational hi;
    bool lo_closed = false;
    bool hi_closed = false;
    SegmentLabel label = SegmentLabel::Unknown;
};

struct Mark {
    Rational q;
    MarkStyle style = MarkStyle::Solid;
    std::string caption;
};

struct DiagramSpec {
    std::vector<Segment> segments;  ///< ordered, non-overlapping, inside [0, 1]
    std::vector<Mark> marks;        ///< ordered by q, inside (0, 1)

    /// Points in (0, 1) where two segments meet with different labels.
    [[nodiscard]] std::vector<Rational> boundaries() const;
};

[[nodiscard]] SegmentLabel label_of(const Verdict& v);

/// Maps the sweep cells to labelled segments. Points certified null are drawn
/// hollow, points of the interval regime bold, other boundaries solid.
/// Throws InvalidArgument on unordered or overlapping cells.
[[nodiscard]] DiagramSpec diagram_from_sweep(const SweepResult& sweep);

[[nodiscard]] json to_json(const DiagramSpec& spec);
[[nodiscard]] DiagramSpec diagram_from_json(const json& j);

[[nodiscard]] std::string svg_string(const DiagramSpec& spec);

/// Writes the SVG to path and the "diagram/v1" sidecar next to it with a .json
/// extension. Throws IoError.
void render_svg(const DiagramSpec& spec, const std::string& path);

/// Components of a cover report drawn to scale.
[[nodiscard]] std::string cover_svg(const CoverReport& report);

}  // namespace ksigma

#pragma once

#include "syzmirror/descriptor.hpp"

#include <span>
#include <string>

namespace syzmirror {

enum class ExportFormat { kJson, kPalp, kSvg, kObj };

ExportFormat parse_format(std::string_view text);

// "V D" header, then one vertex per line as space-separated integers; no
// trailing newline. Throws UsageError("non-integral vertex ...") when a
// coordinate is fractional.
std::string render_palp(const PolytopeDescriptor& d);

// Wavefront OBJ of the boundary of a 3-simplex: 4 vertex lines (chart
// dropping the last ambient coordinate) and 4 outward-oriented triangles.
// Throws UsageError unless n = 3.
std::string render_obj(const PolytopeDescriptor& d);

// SVG 1.1 drawing of one or more 2-simplices overlaid in the chart (x_0, x_1),
// viewBox padded by 10%. Throws UsageError unless every layer has n = 2.
std::string render_svg(std::span<const PolytopeDescriptor> layers);

// Dispatches on the format; svg draws every layer, the other formats take
// exactly one.
std::string render(ExportFormat format, std::span<const PolytopeDescriptor> layers);

// Shortest decimal that round-trips a double rounded to 12 significant digits.
std::string format_float(double v);

}  // namespace syzmirror

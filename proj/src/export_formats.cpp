#include "syzmirror/export_formats.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>

namespace syzmirror {

namespace {

// 2- or 3-dimensional chart of a descriptor vertex: ambient vertices drop the
// last coordinate, dual-lattice vertices are used as they are.
std::vector<Rational> chart(const PolytopeDescriptor& d, const RationalPoint& v) {
  const std::size_t keep = d.kind == DescriptorKind::kDual ? v.size() : v.size() - 1;
  return std::vector<Rational>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(keep));
}

std::array<Rational, 3> minus(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

std::array<Rational, 3> cross(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

ExportFormat parse_format(std::string_view text) {
  if (text == "json") return ExportFormat::kJson;
  if (text == "palp") return ExportFormat::kPalp;
  if (text == "svg") return ExportFormat::kSvg;
  if (text == "obj") return ExportFormat::kObj;
  throw UsageError("unknown format '" + std::string(text) + "' (expected json, palp, svg or obj)");
}

std::string format_float(double v) {
  if (v == 0.0) return "0";  // also folds -0
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return buf.data();
}

std::string render_palp(const PolytopeDescriptor& d) {
  std::string out = std::to_string(d.vertices.size()) + " " + std::to_string(d.coordinate_count());
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    out += '\n';
    for (std::size_t j = 0; j < d.vertices[i].size(); ++j) {
      const Rational& c = d.vertices[i][j];
      if (!c.is_integer()) {
        throw UsageError("palp export: non-integral vertex " + std::to_string(i) + " (coordinate " +
                         c.to_string() + ")");
      }
      if (j) out += ' ';
      out += c.to_string();
    }
  }
  return out;
}

std::string render_obj(const PolytopeDescriptor& d) {
  if (d.n != 3) throw UsageError("obj export requires n = 3, got n = " + std::to_string(d.n));
  std::vector<std::vector<Rational>> pts;
  for (const auto& v : d.vertices) pts.push_back(chart(d, v));

  std::string out = "# " + std::string(to_string(d.kind)) + " n=" + std::to_string(d.n) +
                    " alpha=" + std::to_string(d.alpha) + "\n";
  for (const auto& p : pts) {
    out += "v " + format_float(p[0].to_double()) + " " + format_float(p[1].to_double()) + " " +
           format_float(p[2].to_double()) + "\n";
  }
  // Facet k omits vertex k; orient its normal away from the omitted vertex.
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<std::size_t, 3> tri{};
    std::size_t m = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != k) tri[m++] = j;
    }
    const auto normal = cross(minus(pts[tri[1]], pts[tri[0]]), minus(pts[tri[2]], pts[tri[0]]));
    const auto to_apex = minus(pts[k], pts[tri[0]]);
    const Rational side = normal[0] * to_apex[0] + normal[1] * to_apex[1] + normal[2] * to_apex[2];
    if (side.sign() > 0) std::swap(tri[1], tri[2]);
    out += "f " + std::to_string(tri[0] + 1) + " " + std::to_string(tri[1] + 1) + " " +
           std::to_string(tri[2] + 1) + "\n";
  }
  return out;
}

std::string render_svg(std::span<const PolytopeDescriptor> layers) {
  if (layers.empty()) throw UsageError("svg export needs at least one polytope");
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  std::vector<std::vector<std::array<double, 2>>> polygons;
  for (const auto& d : layers) {
    if (d.n != 2) throw UsageError("svg export requires n = 2, got n = " + std::to_string(d.n));
    auto& poly = polygons.emplace_back();
    for (const auto& v : d.vertices) {
      const auto c = chart(d, v);
      // Screen y grows downwards.
      const std::array<double, 2> p{c[0].to_double(), -c[1].to_double()};
      lo_x = std::min(lo_x, p[0]);
      hi_x = std::max(hi_x, p[0]);
      lo_y = std::min(lo_y, p[1]);
      hi_y = std::max(hi_y, p[1]);
      poly.push_back(p);
    }
  }
  const double pad_x = 0.1 * std::max(hi_x - lo_x, 1.0);
  const double pad_y = 0.1 * std::max(hi_y - lo_y, 1.0);
  const double width = hi_x - lo_x + 2 * pad_x;
  const double height = hi_y - lo_y + 2 * pad_y;
  const double stroke = 0.005 * std::max(width, height);

  static constexpr std::array<const char*, 4> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + format_float(lo_x - pad_x) + " " +
         format_float(lo_y - pad_y) + " " + format_float(width) + " " + format_float(height) + "\">\n";
  for (std::size_t l = 0; l < polygons.size(); ++l) {
    out += "  <polygon class=\"" + std::string(to_string(layers[l].kind)) + "\" fill=\"none\" stroke=\"" +
           kColors[l % kColors.size()] + "\" stroke-width=\"" + format_float(stroke) + "\" points=\"";
    for (std::size_t k = 0; k < polygons[l].size(); ++k) {
      if (k) out += ' ';
      out += format_float(polygons[l][k][0]) + "," + format_float(polygons[l][k][1]);
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render(ExportFormat format, std::span<const PolytopeDescriptor> layers) {
  if (format == ExportFormat::kSvg) return render_svg(layers);
  if (layers.size() != 1) throw UsageError("this format takes exactly one --in file");
  switch (format) {
    case ExportFormat::kJson:
      return render_json(layers.front());
    case ExportFormat::kPalp:
      return render_palp(layers.front());
    case ExportFormat::kObj:
      return render_obj(layers.front());
    case ExportFormat::kSvg:
      break;
  }
  return {};
}

}  // namespace syzmirror

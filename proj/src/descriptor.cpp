#include "syzmirror/descriptor.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace syzmirror {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

int read_positive_int(const ordered_json& root, const char* key) {
  if (!root.contains(key)) field_error(key, "missing");
  const auto& v = root.at(key);
  if (!v.is_number_integer()) field_error(key, "expected an integer");
  const auto value = v.get<std::int64_t>();
  if (value < 1 || value > 1'000'000) field_error(key, "expected an integer in 1..1000000");
  return static_cast<int>(value);
}

}  // namespace

const char* to_string(DescriptorKind k) {
  switch (k) {
    case DescriptorKind::kDelta:
      return "delta";
    case DescriptorKind::kSyz:
      return "syz";
    case DescriptorKind::kDual:
      return "dual";
    case DescriptorKind::kMetricPolar:
      return "metric-polar";
  }
  return "unknown";
}

DescriptorKind parse_kind(std::string_view text) {
  for (auto k : {DescriptorKind::kDelta, DescriptorKind::kSyz, DescriptorKind::kDual, DescriptorKind::kMetricPolar}) {
    if (text == to_string(k)) return k;
  }
  throw ParseError("field 'kind': unknown kind '" + std::string(text) + "'");
}

std::size_t PolytopeDescriptor::coordinate_count() const {
  return static_cast<std::size_t>(n) + (kind == DescriptorKind::kDual ? 0 : 1);
}

PolytopeDescriptor describe(const Polytope& p, DescriptorKind kind) {
  return PolytopeDescriptor{kind, p.n(), p.alpha(), p.vertices(), std::nullopt, std::nullopt};
}

PolytopeDescriptor describe(const SyzPolytope& s) {
  return PolytopeDescriptor{DescriptorKind::kSyz, s.n, s.alpha, s.vertices, std::nullopt, std::nullopt};
}

Polytope to_polytope(const PolytopeDescriptor& d) {
  if (d.kind == DescriptorKind::kDual) {
    throw ParseError("field 'kind': dual-lattice descriptors are not simplices in the moment hyperplane");
  }
  try {
    return Polytope(d.n, d.alpha, d.vertices);
  } catch (const std::exception& e) {
    field_error("vertices", e.what());
  }
}

std::string render_json(const PolytopeDescriptor& d) {
  ordered_json root;
  root["kind"] = to_string(d.kind);
  root["n"] = d.n;
  root["alpha"] = d.alpha;
  ordered_json vertices = ordered_json::array();
  for (const auto& v : d.vertices) {
    ordered_json row = ordered_json::array();
    for (const auto& c : v) row.push_back(c.to_string());
    vertices.push_back(std::move(row));
  }
  root["vertices"] = std::move(vertices);
  if (d.threshold) root["threshold"] = d.threshold->to_string();
  if (d.reflexive) root["reflexive"] = *d.reflexive;
  return root.dump(2) + "\n";
}

PolytopeDescriptor parse_descriptor(std::string_view text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseError("syntax error at line " + std::to_string(line) + ": " + e.what());
  }
  if (!root.is_object()) throw ParseError("syntax error at line 1: descriptor must be a JSON object");
  for (const auto& [key, _] : root.items()) {
    static const char* const kKnown[] = {"kind", "n", "alpha", "vertices", "threshold", "reflexive"};
    if (std::none_of(std::begin(kKnown), std::end(kKnown), [&](const char* k) { return key == k; })) {
      field_error(key, "unknown key");
    }
  }

  PolytopeDescriptor d;
  if (!root.contains("kind") || !root.at("kind").is_string()) field_error("kind", "expected a string");
  d.kind = parse_kind(root.at("kind").get<std::string>());
  d.n = read_positive_int(root, "n");
  d.alpha = read_positive_int(root, "alpha");

  if (!root.contains("vertices") || !root.at("vertices").is_array()) field_error("vertices", "expected an array");
  const auto& vertices = root.at("vertices");
  if (vertices.size() != static_cast<std::size_t>(d.n) + 1) {
    field_error("vertices", "expected " + std::to_string(d.n + 1) + " vertices, got " + std::to_string(vertices.size()));
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const auto& row = vertices[i];
    if (!row.is_array() || row.size() != d.coordinate_count()) {
      field_error(where, "expected an array of " + std::to_string(d.coordinate_count()) + " coordinates");
    }
    RationalPoint v(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string cell = where + "[" + std::to_string(j) + "]";
      if (!row[j].is_string()) field_error(cell, "expected a rational string such as \"3/2\"");
      try {
        v[j] = Rational::parse(row[j].get<std::string>());
      } catch (const std::exception& e) {
        field_error(cell, e.what());
      }
    }
    d.vertices.push_back(std::move(v));
  }

  if (root.contains("threshold")) {
    const auto& t = root.at("threshold");
    if (!t.is_string()) field_error("threshold", "expected a rational string");
    try {
      d.threshold = Rational::parse(t.get<std::string>());
    } catch (const std::exception& e) {
      field_error("threshold", e.what());
    }
  }
  if (root.contains("reflexive")) {
    if (!root.at("reflexive").is_boolean()) field_error("reflexive", "expected true or false");
    d.reflexive = root.at("reflexive").get<bool>();
  }
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace syzmirror

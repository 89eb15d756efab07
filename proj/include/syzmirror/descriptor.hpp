#pragma once

#include "syzmirror/exact_polytope.hpp"
#include "syzmirror/syz_dual.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syzmirror {

// Malformed input file (exit code 3).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable path (exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad flags, unsupported parameter ranges, format/dimension mismatch (exit
// code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DescriptorKind { kDelta, kSyz, kDual, kMetricPolar };

const char* to_string(DescriptorKind k);
DescriptorKind parse_kind(std::string_view text);

// File-exchange record for a polytope. Vertices of kind kDual live in the
// rank-n dual lattice (n coordinates); all other kinds are points of the
// hyperplane sum = alpha in Q^{n+1}.
struct PolytopeDescriptor {
  DescriptorKind kind = DescriptorKind::kDelta;
  int n = 1;
  int alpha = 1;
  std::vector<RationalPoint> vertices;
  std::optional<Rational> threshold;
  std::optional<bool> reflexive;

  std::size_t coordinate_count() const;
  friend bool operator==(const PolytopeDescriptor&, const PolytopeDescriptor&) = default;
};

PolytopeDescriptor describe(const Polytope& p, DescriptorKind kind);
PolytopeDescriptor describe(const SyzPolytope& s);

// Rebuilds the simplex; throws ParseError when the vertices do not form one
// (kDual descriptors are rejected).
Polytope to_polytope(const PolytopeDescriptor& d);

// Pretty-printed JSON, keys in the fixed order kind, n, alpha, vertices,
// threshold, reflexive; rationals as strings; trailing newline.
std::string render_json(const PolytopeDescriptor& d);

// Throws ParseError naming the line (syntax errors) or the field (schema
// errors).
PolytopeDescriptor parse_descriptor(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace syzmirror

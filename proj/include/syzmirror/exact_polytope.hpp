#pragma once

// Exact constructions on the moment simplex of complex projective space.
//
// Every polytope handled here is an n-simplex living in the affine hyperplane
// x_0 + ... + x_n = alpha of Q^{n+1}. Vertices are kept in canonical index
// order; facet i is always the facet opposite vertex i.

#include "syzmirror/rational.hpp"

#include <cstddef>
#include <vector>

namespace syzmirror {

class Polytope {
 public:
  // Validates that every vertex sums to alpha and that the n+1 vertices are
  // affinely independent. Throws std::invalid_argument otherwise.
  Polytope(int n, int alpha, std::vector<RationalPoint> vertices);

  int n() const { return n_; }
  int alpha() const { return alpha_; }
  std::size_t ambient_dim() const { return static_cast<std::size_t>(n_) + 1; }
  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  const RationalPoint& vertex(std::size_t i) const { return vertices_.at(i); }

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  int n_;
  int alpha_;
  std::vector<RationalPoint> vertices_;
};

enum class Position { kInterior, kBoundary, kOutside };

const char* to_string(Position p);

// The simplex with vertices alpha * e_i, i = 0..n. Throws std::domain_error
// for n < 1 or alpha < 1.
Polytope moment_polytope(int n, int alpha);

// Vertex barycenter. For the moment simplex this is alpha/(n+1) * (1,...,1).
RationalPoint center(const Polytope& p);

// Barycenter of the facet opposite vertex i. For n = 1 this is the opposite
// vertex itself.
RationalPoint face_center(const Polytope& p, std::size_t i);

// alpha * (1, ..., 1-n, ..., 1) with 1-n in slot i.
RationalPoint dual_vertex(int n, int alpha, std::size_t i);

// Point on the ray from the center through face center q_i:
// slot i is alpha(1-t)/(n+1), all other slots alpha(1/(n+1) + t/(n(n+1))).
// gamma(0) is the center, gamma(1) is q_i. Throws std::domain_error for t < 0.
RationalPoint gamma(int n, int alpha, std::size_t i, const Rational& t);

// Solves gamma(n, alpha, i, t) = dual_vertex(n, alpha, i) for t from slot i and
// checks the remaining slots agree. Throws std::logic_error on disagreement.
Rational solve_scaling(int n, int alpha, std::size_t i);

// Threshold c = n * alpha^2 / (n+1) at which metric_polar(moment_polytope(n,
// alpha), c) has vertices dual_vertex(n, alpha, i).
Rational polar_threshold(int n, int alpha);

// {x : sum x = alpha, (x - s).(y - s) <= c for every vertex y of p}, where s is
// the vertex barycenter. Vertex k of the result is the point saturating the
// constraints of every vertex of p except y_k. Throws std::domain_error for
// c <= 0.
Polytope metric_polar(const Polytope& p, const Rational& c);

struct BatyrevDual {
  // Dual-lattice coordinates w.r.t. the basis dual to f_i = e_i - e_n,
  // i = 0..n-1. Vertex k saturates every constraint except the one of p's
  // vertex k.
  std::vector<RationalPoint> vertices;
  bool center_is_lattice_point = false;
  BigInt interior_lattice_points;
  bool dual_is_integral = false;
  bool is_reflexive = false;
};

// Lattice dual {u : <u, y - s> >= -1 for y in p} of the moment simplex,
// computed in coordinates of the rank-n lattice {x in Z^{n+1} : sum x = 0}.
// Requires p to be a moment polytope; throws std::invalid_argument otherwise.
BatyrevDual batyrev_dual(const Polytope& p);

// Exact barycentric coordinates of x with respect to p's vertices.
// Throws std::invalid_argument on dimension mismatch or when x is off the
// hyperplane sum = alpha.
std::vector<Rational> barycentric(const Polytope& p, const RationalPoint& x);

Position contains(const Polytope& p, const RationalPoint& x);

// Indices of the facets containing x (ascending); empty for interior points.
// Throws std::invalid_argument if x is not in p.
std::vector<std::size_t> facets_containing(const Polytope& p, const RationalPoint& x);

struct DualityReport {
  std::vector<RationalPoint> metric_polar_vertices;
  std::vector<RationalPoint> batyrev_dual_vertices;
  bool is_reflexive = false;
  Rational scaling_t;
};

DualityReport duality_report(int n, int alpha);

}  // namespace syzmirror

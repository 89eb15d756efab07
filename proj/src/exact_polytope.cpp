#include "syzmirror/exact_polytope.hpp"

#include "linear_algebra.hpp"

#include <stdexcept>
#include <string>

namespace syzmirror {

namespace {

void check_parameters(int n, int alpha) {
  if (n < 1) throw std::domain_error("n must be >= 1, got " + std::to_string(n));
  if (alpha < 1) throw std::domain_error("alpha must be >= 1, got " + std::to_string(alpha));
}

void check_index(int n, std::size_t i) {
  if (i > static_cast<std::size_t>(n)) {
    throw std::out_of_range("index " + std::to_string(i) + " out of range 0.." + std::to_string(n));
  }
}

bool is_moment_polytope(const Polytope& p) {
  for (std::size_t i = 0; i < p.ambient_dim(); ++i) {
    for (std::size_t j = 0; j < p.ambient_dim(); ++j) {
      if (p.vertex(i)[j] != (i == j ? Rational(p.alpha()) : Rational(0))) return false;
    }
  }
  return true;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (int j = 1; j <= k; ++j) result = result * (n - k + j) / j;
  return result;
}

// Vertex k of the polar of a simplex: the point of the hyperplane sum = alpha
// where <x, normals[j]> = rhs[j] for every j != k.
RationalPoint saturate_all_but(const std::vector<RationalPoint>& normals,
                               const std::vector<Rational>& rhs, std::size_t k,
                               const Rational* hyperplane_sum) {
  detail::RationalMatrix a;
  std::vector<Rational> b;
  for (std::size_t j = 0; j < normals.size(); ++j) {
    if (j == k) continue;
    a.push_back(normals[j].coords());
    b.push_back(rhs[j]);
  }
  if (hyperplane_sum) {
    a.emplace_back(normals.front().size(), Rational(1));
    b.push_back(*hyperplane_sum);
  }
  auto x = detail::solve(std::move(a), std::move(b));
  if (!x) throw std::logic_error("degenerate facet system while computing a dual vertex");
  return RationalPoint(std::move(*x));
}

}  // namespace

Polytope::Polytope(int n, int alpha, std::vector<RationalPoint> vertices)
    : n_(n), alpha_(alpha), vertices_(std::move(vertices)) {
  check_parameters(n, alpha);
  if (vertices_.size() != ambient_dim()) {
    throw std::invalid_argument("an " + std::to_string(n) + "-simplex needs " +
                                std::to_string(ambient_dim()) + " vertices, got " +
                                std::to_string(vertices_.size()));
  }
  for (const auto& v : vertices_) {
    if (v.size() != ambient_dim()) throw std::invalid_argument("vertex has wrong dimension");
    if (v.sum() != Rational(alpha)) {
      throw std::invalid_argument("vertex coordinates must sum to alpha");
    }
  }
  // Vertices lie on a hyperplane missing the origin, so affine independence
  // is linear independence.
  detail::RationalMatrix rows;
  for (const auto& v : vertices_) rows.push_back(v.coords());
  if (detail::rank(std::move(rows)) != ambient_dim()) {
    throw std::invalid_argument("vertices are not affinely independent");
  }
}

const char* to_string(Position p) {
  switch (p) {
    case Position::kInterior:
      return "interior";
    case Position::kBoundary:
      return "boundary";
    case Position::kOutside:
      return "outside";
  }
  return "unknown";
}

Polytope moment_polytope(int n, int alpha) {
  check_parameters(n, alpha);
  std::vector<RationalPoint> vertices;
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  for (std::size_t i = 0; i < dim; ++i) {
    RationalPoint v(dim);
    v[i] = alpha;
    vertices.push_back(std::move(v));
  }
  return Polytope(n, alpha, std::move(vertices));
}

RationalPoint center(const Polytope& p) {
  RationalPoint s(p.ambient_dim());
  for (const auto& v : p.vertices()) s += v;
  s *= Rational(1, p.n() + 1);
  return s;
}

RationalPoint face_center(const Polytope& p, std::size_t i) {
  check_index(p.n(), i);
  RationalPoint q(p.ambient_dim());
  for (std::size_t j = 0; j < p.ambient_dim(); ++j) {
    if (j != i) q += p.vertex(j);
  }
  q *= Rational(1, p.n());
  return q;
}

RationalPoint dual_vertex(int n, int alpha, std::size_t i) {
  check_parameters(n, alpha);
  check_index(n, i);
  RationalPoint q(std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(alpha)));
  q[i] = Rational(alpha) * Rational(1 - n);
  return q;
}

RationalPoint gamma(int n, int alpha, std::size_t i, const Rational& t) {
  check_parameters(n, alpha);
  check_index(n, i);
  if (t.sign() < 0) throw std::domain_error("gamma: t must be >= 0, got " + t.to_string());
  const Rational a(alpha);
  const Rational other = a * (Rational(1, n + 1) + t / Rational(n * (n + 1)));
  RationalPoint g(std::vector<Rational>(static_cast<std::size_t>(n) + 1, other));
  g[i] = a * (Rational(1) - t) / Rational(n + 1);
  return g;
}

Rational solve_scaling(int n, int alpha, std::size_t i) {
  const RationalPoint target = dual_vertex(n, alpha, i);
  // Slot i of gamma is alpha/(n+1) - t * alpha/(n+1).
  const Rational step = Rational(alpha, n + 1);
  const Rational t = (step - target[i]) / step;
  if (t.sign() < 0 || gamma(n, alpha, i, t) != target) {
    throw std::logic_error("solve_scaling: coordinates disagree on t for n=" + std::to_string(n) +
                           ", alpha=" + std::to_string(alpha) + ", i=" + std::to_string(i));
  }
  return t;
}

Rational polar_threshold(int n, int alpha) {
  check_parameters(n, alpha);
  return Rational(n) * Rational(alpha) * Rational(alpha) / Rational(n + 1);
}

Polytope metric_polar(const Polytope& p, const Rational& c) {
  if (c.sign() <= 0) throw std::domain_error("metric_polar: threshold must be > 0, got " + c.to_string());
  const RationalPoint s = center(p);
  std::vector<RationalPoint> normals;
  std::vector<Rational> rhs;
  for (const auto& y : p.vertices()) {
    normals.push_back(y - s);
    rhs.push_back(c + dot(s, normals.back()));
  }
  const Rational alpha(p.alpha());
  std::vector<RationalPoint> vertices;
  for (std::size_t k = 0; k < p.ambient_dim(); ++k) {
    vertices.push_back(saturate_all_but(normals, rhs, k, &alpha));
  }
  return Polytope(p.n(), p.alpha(), std::move(vertices));
}

BatyrevDual batyrev_dual(const Polytope& p) {
  if (!is_moment_polytope(p)) throw std::invalid_argument("batyrev_dual expects a moment polytope");
  const std::size_t n = static_cast<std::size_t>(p.n());
  const RationalPoint s = center(p);

  // y - s lies in the sum-zero lattice; its coordinates in the basis
  // f_i = e_i - e_n are its first n entries.
  std::vector<RationalPoint> shifted;
  for (const auto& y : p.vertices()) {
    const RationalPoint d = y - s;
    shifted.emplace_back(std::vector<Rational>(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n)));
  }
  const std::vector<Rational> rhs(shifted.size(), Rational(-1));

  BatyrevDual out;
  for (std::size_t k = 0; k < shifted.size(); ++k) {
    out.vertices.push_back(saturate_all_but(shifted, rhs, k, nullptr));
  }
  out.center_is_lattice_point = s.is_integral();
  // Interior lattice points of alpha * simplex: compositions of alpha into
  // n+1 positive parts.
  out.interior_lattice_points = binomial(p.alpha() - 1, p.n());
  out.dual_is_integral = true;
  for (const auto& v : out.vertices) out.dual_is_integral = out.dual_is_integral && v.is_integral();
  out.is_reflexive =
      out.center_is_lattice_point && out.interior_lattice_points == 1 && out.dual_is_integral;
  return out;
}

std::vector<Rational> barycentric(const Polytope& p, const RationalPoint& x) {
  if (x.size() != p.ambient_dim()) {
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(p.ambient_dim()));
  }
  if (x.sum() != Rational(p.alpha())) {
    throw std::invalid_argument("point " + x.to_string() + " is off the hyperplane");
  }
  detail::RationalMatrix a(p.ambient_dim(), std::vector<Rational>(p.ambient_dim()));
  for (std::size_t k = 0; k < p.ambient_dim(); ++k) {
    for (std::size_t j = 0; j < p.ambient_dim(); ++j) a[j][k] = p.vertex(k)[j];
  }
  auto lambda = detail::solve(std::move(a), x.coords());
  if (!lambda) throw std::logic_error("simplex vertex matrix is singular");
  return *lambda;
}

Position contains(const Polytope& p, const RationalPoint& x) {
  if (x.size() != p.ambient_dim()) {
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(p.ambient_dim()));
  }
  if (x.sum() != Rational(p.alpha())) return Position::kOutside;
  bool on_boundary = false;
  for (const auto& l : barycentric(p, x)) {
    if (l.sign() < 0) return Position::kOutside;
    on_boundary = on_boundary || l.sign() == 0;
  }
  return on_boundary ? Position::kBoundary : Position::kInterior;
}

std::vector<std::size_t> facets_containing(const Polytope& p, const RationalPoint& x) {
  if (contains(p, x) == Position::kOutside) {
    throw std::invalid_argument("point lies outside the polytope");
  }
  const auto lambda = barycentric(p, x);
  std::vector<std::size_t> facets;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].sign() == 0) facets.push_back(i);
  }
  return facets;
}

DualityReport duality_report(int n, int alpha) {
  const Polytope delta = moment_polytope(n, alpha);
  DualityReport report;
  report.metric_polar_vertices = metric_polar(delta, polar_threshold(n, alpha)).vertices();
  const BatyrevDual lattice = batyrev_dual(delta);
  report.batyrev_dual_vertices = lattice.vertices;
  report.is_reflexive = lattice.is_reflexive;
  report.scaling_t = solve_scaling(n, alpha, 0);
  return report;
}

}  // namespace syzmirror

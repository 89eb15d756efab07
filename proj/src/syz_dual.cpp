#include "syzmirror/syz_dual.hpp"

#include "grid_search.hpp"

#include <stdexcept>
#include <string>

namespace syzmirror {

std::vector<double> dualize_radii(std::span<const double> radii, int alpha) {
  if (alpha <= 0) throw std::domain_error("alpha must be > 0");
  std::vector<double> out;
  out.reserve(radii.size());
  for (double r : radii) {
    if (r < 0.0) throw std::domain_error("negative radius " + std::to_string(r));
    out.push_back(r == 0.0 ? static_cast<double>(alpha) : 1.0 / r);
  }
  return out;
}

DualFibration dualize_fibration(std::span<const FiberSample> samples, int alpha) {
  DualFibration dual;
  dual.alpha = alpha;
  dual.samples.reserve(samples.size());
  for (const auto& s : samples) {
    FiberSample d = s;
    d.radii = dualize_radii(s.radii, alpha);
    dual.samples.push_back(std::move(d));
  }
  return dual;
}

double face_dual_volume(std::span<const double> x, int alpha, Metric metric) {
  const auto primal = coordinate_radii(fiber_representative(x, alpha, metric), alpha, metric);
  double volume = 1.0;
  for (double r : primal) {
    if (r > 0.0) volume *= 1.0 / r;
  }
  return volume;
}

FaceOptimum minimize_dual_volume(const Polytope& p, std::size_t i, Metric metric, const GridSpec& g) {
  const int alpha = p.alpha();
  return detail::optimize_face(p, i, g, detail::Extremum::kMin, [alpha, metric](std::span<const double> x) {
    return face_dual_volume(x, alpha, metric);
  });
}

SyzPolytope syz_polytope(int n, int alpha) {
  const Polytope delta = moment_polytope(n, alpha);
  SyzPolytope s{n, alpha, {}};
  for (std::size_t i = 0; i < delta.ambient_dim(); ++i) s.vertices.push_back(face_center(delta, i));
  return s;
}

Polytope recover_dual(const SyzPolytope& s) {
  const RationalPoint c = center(moment_polytope(s.n, s.alpha));
  const Rational dilation = Rational(s.n) * Rational(s.n);
  std::vector<RationalPoint> vertices;
  for (const auto& v : s.vertices) vertices.push_back(c + dilation * (v - c));
  return Polytope(s.n, s.alpha, std::move(vertices));
}

}  // namespace syzmirror

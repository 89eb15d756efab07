#include "syzmirror/moment_fibration.hpp"

#include "grid_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace syzmirror {

namespace {

double norm2(const std::vector<std::complex<double>>& z) {
  double total = 0.0;
  for (const auto& c : z) total += std::norm(c);
  return total;
}

Gauge gauge_for(Metric m) { return m == Metric::kFlatScaled ? Gauge::kUnitNorm : Gauge::kMaxModulus; }

double radius(double modulus, int alpha, Metric m) {
  if (m == Metric::kFlatScaled) return alpha * modulus;
  const double sq = modulus * modulus;
  return alpha * sq / (1.0 + sq);
}

// Compositions of `total` into `parts` nonnegative parts (or positive parts
// when `positive`), lexicographic order.
void compositions(int total, std::size_t parts, bool positive, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  const int floor = positive ? 1 : 0;
  if (parts == 1) {
    if (total >= floor) {
      prefix.push_back(total);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  const int reserve = floor * static_cast<int>(parts - 1);
  for (int k = floor; k <= total - reserve; ++k) {
    prefix.push_back(k);
    compositions(total - k, parts - 1, positive, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const char* to_string(Metric m) { return m == Metric::kFlatScaled ? "flat" : "fs"; }

Metric parse_metric(std::string_view text) {
  if (text == "flat") return Metric::kFlatScaled;
  if (text == "fs") return Metric::kFubiniStudy;
  throw std::invalid_argument("unknown metric '" + std::string(text) + "' (expected flat or fs)");
}

ProjectivePoint::ProjectivePoint(std::vector<std::complex<double>> coords, Gauge gauge)
    : coords_(std::move(coords)), gauge_(gauge) {
  if (coords_.size() < 2) throw std::invalid_argument("projective point needs at least 2 coordinates");
  if (norm2(coords_) == 0.0) throw std::invalid_argument("all homogeneous coordinates are zero");
}

ProjectivePoint ProjectivePoint::normalized(Gauge gauge) const {
  double scale = 1.0;
  switch (gauge) {
    case Gauge::kUnitNorm:
      scale = std::sqrt(norm2(coords_));
      break;
    case Gauge::kMaxModulus:
      scale = 0.0;
      for (const auto& c : coords_) scale = std::max(scale, std::abs(c));
      break;
    case Gauge::kRaw:
      break;
  }
  std::vector<std::complex<double>> out(coords_);
  for (auto& c : out) c /= scale;
  // Pin the largest modulus to exactly 1 so |z_j| = 1 tests are exact.
  if (gauge == Gauge::kMaxModulus) {
    const auto top = std::max_element(out.begin(), out.end(),
                                      [](const auto& a, const auto& b) { return std::abs(a) < std::abs(b); });
    *top = std::polar(1.0, std::arg(*top));
  }
  return ProjectivePoint(std::move(out), gauge);
}

ProjectivePoint ProjectivePoint::rotated(std::span<const double> phases) const {
  if (phases.size() != coords_.size() - 1) throw std::invalid_argument("expected n torus phases");
  std::vector<std::complex<double>> out(coords_);
  for (std::size_t i = 0; i < phases.size(); ++i) out[i] *= std::polar(1.0, phases[i]);
  return ProjectivePoint(std::move(out), gauge_);
}

std::vector<double> moment_map(const ProjectivePoint& z, int alpha) {
  const double total = norm2(z.coords());
  std::vector<double> x;
  x.reserve(z.coords().size());
  for (const auto& c : z.coords()) x.push_back(alpha * std::norm(c) / total);
  return x;
}

std::vector<double> coordinate_radii(const ProjectivePoint& z, int alpha, Metric metric) {
  const ProjectivePoint gauged = z.normalized(gauge_for(metric));
  const auto& c = gauged.coords();
  const auto nonzero = std::count_if(c.begin(), c.end(), [](const auto& v) { return v != 0.0; });
  std::vector<double> r(c.size(), 0.0);
  if (nonzero < 2) return r;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0.0) r[j] = radius(std::abs(c[j]), alpha, metric);
  }
  return r;
}

FiberSample fiber_radii(const ProjectivePoint& z, int alpha, Metric metric) {
  const ProjectivePoint gauged = z.normalized(gauge_for(metric));
  const auto& c = gauged.coords();
  const std::size_t n = c.size() - 1;

  FiberSample sample;
  sample.base = moment_map(z, alpha);
  sample.metric = metric;
  sample.radii.assign(n, 0.0);
  // With z_n = 0 the diagonal circle acts trivially, so the factor of the last
  // nonzero coordinate is absorbed. This also covers a lone nonzero z_i.
  std::size_t absorbed = n;
  if (c[n] == 0.0) {
    for (std::size_t j = n; j-- > 0;) {
      if (c[j] != 0.0) {
        absorbed = j;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] != 0.0 && i != absorbed) sample.radii[i] = radius(std::abs(c[i]), alpha, metric);
  }
  sample.dim = static_cast<int>(std::count_if(sample.radii.begin(), sample.radii.end(),
                                              [](double r) { return r > 0.0; }));
  return sample;
}

int fiber_dimension(const Polytope& p, const RationalPoint& x) {
  return p.n() - static_cast<int>(facets_containing(p, x).size());
}

int fiber_dimension(const Polytope& p, std::span<const double> x) {
  if (x.size() != p.ambient_dim()) throw std::invalid_argument("point dimension mismatch");
  const double tol = kIdentityTolerance * p.alpha();
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (std::abs(sum - p.alpha()) > tol) throw std::invalid_argument("point is off the hyperplane");
  // Barycentric coordinates on the moment simplex are x / alpha.
  if (!(p == moment_polytope(p.n(), p.alpha()))) {
    throw std::invalid_argument("floating-point fiber_dimension expects the moment polytope");
  }
  int on_facets = 0;
  for (double v : x) {
    if (v < -tol) throw std::invalid_argument("point lies outside the polytope");
    if (std::abs(v) <= tol) ++on_facets;
  }
  return p.n() - on_facets;
}

double fiber_volume(std::span<const double> radii) {
  double volume = 1.0;
  for (double r : radii) {
    if (r > 0.0) volume *= r;
  }
  return volume;
}

double fiber_volume(const FiberSample& sample) { return fiber_volume(sample.radii); }

std::vector<double> GridPoint::coords(int alpha, int resolution) const {
  std::vector<double> x;
  x.reserve(counts.size());
  for (int k : counts) x.push_back(static_cast<double>(alpha) * k / resolution);
  return x;
}

RationalPoint GridPoint::exact(int alpha, int resolution) const {
  RationalPoint x(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) x[j] = Rational(alpha) * Rational(counts[j], resolution);
  return x;
}

std::vector<GridPoint> sample_face(const Polytope& p, const GridSpec& g) {
  if (g.resolution < 2) throw std::invalid_argument("grid resolution must be >= 2");
  if (g.face_index > static_cast<std::size_t>(p.n())) throw std::out_of_range("face index out of range");
  std::vector<std::vector<int>> parts;
  std::vector<int> prefix;
  compositions(g.resolution, p.ambient_dim() - 1, g.interior_only, prefix, parts);
  std::vector<GridPoint> grid;
  grid.reserve(parts.size());
  for (auto& k : parts) {
    k.insert(k.begin() + static_cast<std::ptrdiff_t>(g.face_index), 0);
    grid.push_back(GridPoint{std::move(k)});
  }
  return grid;
}

ProjectivePoint fiber_representative(std::span<const double> x, int alpha, Metric metric) {
  std::vector<std::complex<double>> z(x.size());
  if (metric == Metric::kFlatScaled) {
    for (std::size_t j = 0; j < x.size(); ++j) z[j] = std::sqrt(std::max(x[j], 0.0) / alpha);
    return ProjectivePoint(std::move(z), Gauge::kUnitNorm);
  }
  const double top = *std::max_element(x.begin(), x.end());
  for (std::size_t j = 0; j < x.size(); ++j) z[j] = std::sqrt(std::max(x[j], 0.0) / top);
  return ProjectivePoint(std::move(z), Gauge::kMaxModulus);
}

double face_fiber_volume(std::span<const double> x, int alpha, Metric metric) {
  return fiber_volume(coordinate_radii(fiber_representative(x, alpha, metric), alpha, metric));
}

FaceOptimum maximize_face_volume(const Polytope& p, std::size_t i, Metric metric, const GridSpec& g) {
  const int alpha = p.alpha();
  return detail::optimize_face(p, i, g, detail::Extremum::kMax, [alpha, metric](std::span<const double> x) {
    return face_fiber_volume(x, alpha, metric);
  });
}

double special_defect(double r) {
  if (!(r > 0.0)) throw std::domain_error("special_defect: radius must be > 0");
  // Im(dz) = dy; on the tangent (-r sin t, r cos t) it reads r cos t.
  constexpr int kSamples = 720;
  double sup = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / kSamples;
    sup = std::max(sup, std::abs(r * std::cos(t)));
  }
  return sup;
}

namespace detail {

FaceOptimum optimize_face(const Polytope& p, std::size_t i, const GridSpec& g, Extremum direction,
                          const std::function<double(std::span<const double>)>& score) {
  if (p.n() < 2) throw std::invalid_argument("face search needs n >= 2");
  if (g.resolution < p.n()) {
    throw std::invalid_argument("resolution " + std::to_string(g.resolution) +
                                " has no interior points on an " + std::to_string(p.n() - 1) + "-face");
  }
  GridSpec spec = g;
  spec.face_index = i;
  spec.interior_only = true;
  const auto grid = sample_face(p, spec);

  std::vector<double> values(grid.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(grid.size() / 64, 1));
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (grid.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t end = std::min(grid.size(), (w + 1) * chunk);
        for (std::size_t k = w * chunk; k < end; ++k) {
          values[k] = score(grid[k].coords(p.alpha(), spec.resolution));
        }
      });
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    const double margin = 1e-12 * std::abs(values[best]);
    const bool improves = direction == Extremum::kMax ? values[k] > values[best] + margin
                                                      : values[k] < values[best] - margin;
    if (improves) best = k;
  }

  FaceOptimum out;
  out.argbest = grid[best];
  out.point = grid[best].coords(p.alpha(), spec.resolution);
  out.value = values[best];
  out.evaluated = grid.size();
  out.grid_spacing = p.alpha() * std::numbers::sqrt2 / spec.resolution;
  const auto q = face_center(p, i).to_double();
  double d2 = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) d2 += (out.point[j] - q[j]) * (out.point[j] - q[j]);
  out.distance_to_center = std::sqrt(d2);
  return out;
}

}  // namespace detail

}  // namespace syzmirror

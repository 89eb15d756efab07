#pragma once

// Floating-point side of the torus fibration of P^n over its moment simplex:
// moment map, per-factor circle radii under two metric conventions, fiber
// dimension, and grid search for the maximal-volume fiber over a facet.

#include "syzmirror/exact_polytope.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace syzmirror {

enum class Gauge {
  kUnitNorm,    // sum |z_j|^2 = 1
  kMaxModulus,  // max |z_j| = 1
  kRaw,
};

enum class Metric {
  kFlatScaled,   // r = alpha |z|, unit-norm gauge
  kFubiniStudy,  // r = alpha |z|^2 / (1 + |z|^2), max-modulus gauge
};

const char* to_string(Metric m);
Metric parse_metric(std::string_view text);  // "flat" or "fs"

inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr double kOptimumTolerance = 1e-9;

// Homogeneous coordinates [z_0 : ... : z_n].
class ProjectivePoint {
 public:
  // Throws std::invalid_argument if all coordinates vanish or fewer than two
  // coordinates are given.
  explicit ProjectivePoint(std::vector<std::complex<double>> coords, Gauge gauge = Gauge::kRaw);

  int n() const { return static_cast<int>(coords_.size()) - 1; }
  Gauge gauge() const { return gauge_; }
  const std::vector<std::complex<double>>& coords() const { return coords_; }

  // Same projective point, representative rescaled to the given gauge.
  ProjectivePoint normalized(Gauge gauge) const;

  // Acts by the torus: z_i -> exp(i theta_i) z_i for i < n, z_n fixed.
  ProjectivePoint rotated(std::span<const double> phases) const;

 private:
  std::vector<std::complex<double>> coords_;
  Gauge gauge_;
};

// alpha * (|z_0|^2, ..., |z_n|^2) / sum |z_j|^2.
std::vector<double> moment_map(const ProjectivePoint& z, int alpha);

struct FiberSample {
  std::vector<double> base;
  // Radii of the torus factors theta_0 .. theta_{n-1}.
  std::vector<double> radii;
  int dim = 0;
  Metric metric = Metric::kFlatScaled;
};

// Per-coordinate circle radii (n+1 entries) of the fiber through z, after
// applying the gauge of the metric. Entry j is zero when z_j = 0 or when z_j is
// the only nonzero coordinate (its orbit is absorbed by projective rescaling).
std::vector<double> coordinate_radii(const ProjectivePoint& z, int alpha, Metric metric);

// FiberSample with the factor radii theta_0 .. theta_{n-1}.
FiberSample fiber_radii(const ProjectivePoint& z, int alpha, Metric metric);

int fiber_dimension(const Polytope& p, const RationalPoint& x);
// Coordinates within kIdentityTolerance * alpha of zero count as zero.
int fiber_dimension(const Polytope& p, std::span<const double> x);

// Product of the strictly positive radii; 1 for a point fiber.
double fiber_volume(std::span<const double> radii);
double fiber_volume(const FiberSample& sample);

struct GridSpec {
  int resolution = 2;
  std::size_t face_index = 0;
  bool interior_only = false;
};

// A barycentric grid point alpha * counts / resolution on the moment simplex.
struct GridPoint {
  std::vector<int> counts;

  std::vector<double> coords(int alpha, int resolution) const;
  RationalPoint exact(int alpha, int resolution) const;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Grid over facet V_i of the moment simplex p, in lexicographic order of
// counts. Throws std::invalid_argument for resolution < 2 or a bad face.
std::vector<GridPoint> sample_face(const Polytope& p, const GridSpec& g);

// Representative of the fiber over a base point x, in the metric's gauge:
// |z_j| = sqrt(x_j/alpha) for the flat metric, |z_j|^2 = x_j / max x for
// Fubini-Study. All phases are zero.
ProjectivePoint fiber_representative(std::span<const double> x, int alpha, Metric metric);

struct FaceOptimum {
  GridPoint argbest;
  std::vector<double> point;
  double value = 0.0;
  // Ambient distance from the optimum to the face center q_i, and the grid
  // edge length alpha * sqrt(2) / resolution.
  double distance_to_center = 0.0;
  double grid_spacing = 0.0;
  std::size_t evaluated = 0;
};

// Torus volume over a facet point: product of its nonzero coordinate radii.
double face_fiber_volume(std::span<const double> x, int alpha, Metric metric);

// Grid argmax of face_fiber_volume over the interior grid of facet V_i. Ties
// (relative 1e-12) go to the lexicographically lowest grid index. Requires
// n >= 2 and resolution >= n.
FaceOptimum maximize_face_volume(const Polytope& p, std::size_t i, Metric metric, const GridSpec& g);

// Sup over the circle of radius r in C of |Im(dz)| applied to the tangent
// (-r sin t, r cos t). Strictly positive, so the circle is not special
// Lagrangian. Throws std::domain_error for r <= 0.
double special_defect(double r);

}  // namespace syzmirror

#pragma once

// T-duality on the boundary fibration: R -> 1/R on every circle factor, with
// collapsed circles (R = 0) sent to alpha.

#include "syzmirror/exact_polytope.hpp"
#include "syzmirror/moment_fibration.hpp"

#include <span>
#include <vector>

namespace syzmirror {

struct DualFibration {
  std::vector<FiberSample> samples;
  int alpha = 1;
};

// Exact convex hull of the face centers q_0..q_n, vertex i = q_i.
struct SyzPolytope {
  int n = 1;
  int alpha = 1;
  std::vector<RationalPoint> vertices;
};

// r > 0 -> 1/r, r = 0 -> alpha. Throws std::domain_error for a negative radius
// or alpha <= 0.
std::vector<double> dualize_radii(std::span<const double> radii, int alpha);

// Dualizes every sample's factor radii; base points and dims are kept.
DualFibration dualize_fibration(std::span<const FiberSample> samples, int alpha);

// Product of 1/r over the coordinate radii that are nonzero on the primal side.
double face_dual_volume(std::span<const double> x, int alpha, Metric metric);

// Grid argmin of face_dual_volume over the interior grid of facet V_i, with the
// same grid and tie-breaking as maximize_face_volume.
FaceOptimum minimize_dual_volume(const Polytope& p, std::size_t i, Metric metric, const GridSpec& g);

SyzPolytope syz_polytope(int n, int alpha);

// Dilates every vertex by n^2 about the center s: v -> s + n^2 (v - s).
Polytope recover_dual(const SyzPolytope& s);

}  // namespace syzmirror

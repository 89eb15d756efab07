#include "syzmirror/verify.hpp"

#include "syzmirror/descriptor.hpp"
#include "syzmirror/export_formats.hpp"
#include "syzmirror/syz_dual.hpp"

#include <cmath>
#include <functional>

namespace syzmirror {

namespace {

using nlohmann::ordered_json;

double rounded(double v) { return std::stod(format_float(v)); }

ordered_json to_json(const RationalPoint& p) {
  ordered_json row = ordered_json::array();
  for (const auto& c : p) row.push_back(c.to_string());
  return row;
}

ordered_json to_json(const std::vector<double>& p) {
  ordered_json row = ordered_json::array();
  for (double c : p) row.push_back(rounded(c));
  return row;
}

void require_exact_range(const VerifyParams& p) {
  if (p.n < 1 || p.n > 8) throw UsageError("exact checks support 1 <= n <= 8, got n = " + std::to_string(p.n));
  if (p.alpha < 1 || p.alpha > 1000) throw UsageError("alpha must be in 1..1000, got " + std::to_string(p.alpha));
}

void require_grid_range(const VerifyParams& p) {
  if (p.n < 2 || p.n > 4) throw UsageError("grid checks support 2 <= n <= 4, got n = " + std::to_string(p.n));
  if (p.alpha < 1 || p.alpha > 1000) throw UsageError("alpha must be in 1..1000, got " + std::to_string(p.alpha));
  if (p.resolution < p.n || p.resolution > 400) {
    throw UsageError("resolution must be in n..400, got " + std::to_string(p.resolution));
  }
}

ordered_json optimum_json(std::size_t face, const FaceOptimum& o) {
  ordered_json w;
  w["face"] = face;
  w["point"] = to_json(o.point);
  w["value"] = rounded(o.value);
  w["distance_to_face_center"] = rounded(o.distance_to_center);
  w["grid_spacing"] = rounded(o.grid_spacing);
  return w;
}

VerificationReport lemma(const VerifyParams& p) {
  require_grid_range(p);
  const Polytope delta = moment_polytope(p.n, p.alpha);
  VerificationReport r{Check::kLemma, p, true, ordered_json::array()};
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.n); ++i) {
    const auto best = maximize_face_volume(delta, i, p.metric, GridSpec{p.resolution, i, true});
    const bool ok = best.distance_to_center <= best.grid_spacing;
    auto w = optimum_json(i, best);
    w["pass"] = ok;
    r.witness.push_back(std::move(w));
    r.pass = r.pass && ok;
  }
  return r;
}

VerificationReport syz_min(const VerifyParams& p) {
  require_grid_range(p);
  const Polytope delta = moment_polytope(p.n, p.alpha);
  VerificationReport r{Check::kSyzMin, p, true, ordered_json::array()};
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.n); ++i) {
    const GridSpec g{p.resolution, i, true};
    const auto low = minimize_dual_volume(delta, i, p.metric, g);
    const auto high = maximize_face_volume(delta, i, p.metric, g);
    const bool same_point = low.argbest == high.argbest;
    const bool ok = same_point && low.distance_to_center <= low.grid_spacing;
    auto w = optimum_json(i, low);
    w["primal_argmax"] = to_json(high.point);
    w["matches_primal_argmax"] = same_point;
    w["pass"] = ok;
    r.witness.push_back(std::move(w));
    r.pass = r.pass && ok;
  }
  return r;
}

VerificationReport scaling(const VerifyParams& p) {
  require_exact_range(p);
  const Polytope delta = moment_polytope(p.n, p.alpha);
  const RationalPoint s = center(delta);
  const Rational expected = Rational(p.n) * Rational(p.n);
  VerificationReport r{Check::kScaling, p, true, ordered_json::array()};
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.n); ++i) {
    const Rational t = solve_scaling(p.n, p.alpha, i);
    const RationalPoint hat = dual_vertex(p.n, p.alpha, i);
    const RationalPoint reflected = s - Rational(p.n) * (delta.vertex(i) - s);
    const bool ok = t == expected && gamma(p.n, p.alpha, i, t) == hat && reflected == hat;
    ordered_json w;
    w["index"] = i;
    w["t"] = t.to_string();
    w["dual_vertex"] = to_json(hat);
    w["pass"] = ok;
    r.witness.push_back(std::move(w));
    r.pass = r.pass && ok;
  }
  return r;
}

VerificationReport bipolar(const VerifyParams& p) {
  require_exact_range(p);
  const Polytope delta = moment_polytope(p.n, p.alpha);
  const Rational c = polar_threshold(p.n, p.alpha);
  const Polytope polar = metric_polar(delta, c);
  const Polytope back = metric_polar(polar, c);
  const Polytope recovered = recover_dual(syz_polytope(p.n, p.alpha));

  ordered_json mismatches = ordered_json::array();
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.n); ++i) {
    if (polar.vertex(i) != dual_vertex(p.n, p.alpha, i)) mismatches.push_back({{"polar_vertex", i}});
    if (back.vertex(i) != delta.vertex(i)) mismatches.push_back({{"bipolar_vertex", i}});
    if (recovered.vertex(i) != polar.vertex(i)) mismatches.push_back({{"recovered_vertex", i}});
  }
  VerificationReport r{Check::kBipolar, p, mismatches.empty(), ordered_json::object()};
  r.witness["threshold"] = c.to_string();
  ordered_json vertices = ordered_json::array();
  for (const auto& v : polar.vertices()) vertices.push_back(to_json(v));
  r.witness["polar_vertices"] = std::move(vertices);
  r.witness["mismatches"] = std::move(mismatches);
  return r;
}

VerificationReport reflexive(const VerifyParams& p) {
  require_exact_range(p);
  const Polytope delta = moment_polytope(p.n, p.alpha);
  const BatyrevDual dual = batyrev_dual(delta);
  const long long counted = enumerate_interior_lattice_points(p.n, p.alpha);
  const bool enumerated_reflexive = counted == 1 && dual.center_is_lattice_point && dual.dual_is_integral;
  const bool agrees = BigInt(counted) == dual.interior_lattice_points && enumerated_reflexive == dual.is_reflexive;

  VerificationReport r{Check::kReflexive, p, agrees, ordered_json::object()};
  r.witness["is_reflexive"] = dual.is_reflexive;
  r.witness["center_is_lattice_point"] = dual.center_is_lattice_point;
  r.witness["interior_lattice_points"] = dual.interior_lattice_points.str();
  r.witness["enumerated_interior_lattice_points"] = counted;
  r.witness["dual_is_integral"] = dual.dual_is_integral;
  ordered_json vertices = ordered_json::array();
  for (const auto& v : dual.vertices) vertices.push_back(to_json(v));
  r.witness["dual_vertices"] = std::move(vertices);
  return r;
}

}  // namespace

Check parse_check(std::string_view text) {
  for (auto c : {Check::kLemma, Check::kScaling, Check::kSyzMin, Check::kBipolar, Check::kReflexive}) {
    if (text == to_string(c)) return c;
  }
  throw UsageError("unknown check '" + std::string(text) + "' (expected lemma, scaling, syz-min, bipolar or reflexive)");
}

const char* to_string(Check c) {
  switch (c) {
    case Check::kLemma:
      return "lemma";
    case Check::kScaling:
      return "scaling";
    case Check::kSyzMin:
      return "syz-min";
    case Check::kBipolar:
      return "bipolar";
    case Check::kReflexive:
      return "reflexive";
  }
  return "unknown";
}

nlohmann::ordered_json VerificationReport::to_json() const {
  ordered_json j;
  j["check"] = to_string(check);
  ordered_json params_json;
  params_json["n"] = params.n;
  params_json["alpha"] = params.alpha;
  if (check == Check::kLemma || check == Check::kSyzMin) {
    params_json["metric"] = to_string(params.metric);
    params_json["resolution"] = params.resolution;
  }
  j["parameters"] = std::move(params_json);
  j["status"] = pass ? "pass" : "fail";
  j["witness"] = witness;
  return j;
}

VerificationReport run_check(Check check, const VerifyParams& params) {
  switch (check) {
    case Check::kLemma:
      return lemma(params);
    case Check::kScaling:
      return scaling(params);
    case Check::kSyzMin:
      return syz_min(params);
    case Check::kBipolar:
      return bipolar(params);
    case Check::kReflexive:
      return reflexive(params);
  }
  throw UsageError("unknown check");
}

long long enumerate_interior_lattice_points(int n, int alpha) {
  if (n < 1 || alpha < 1) throw UsageError("n and alpha must be >= 1");
  const double candidates = std::pow(std::max(alpha - 1, 1), n);
  if (candidates > 1e6) {
    throw UsageError("lattice-point enumeration limited to 10^6 candidates, (alpha-1)^n = " + format_float(candidates));
  }
  // Odometer over x_0..x_{n-1} in [1, alpha-1]; x_n is fixed by the sum.
  long long count = 0;
  if (alpha < 2) return 0;
  std::vector<int> x(static_cast<std::size_t>(n), 1);
  while (true) {
    long long rest = alpha;
    for (int v : x) rest -= v;
    if (rest >= 1) ++count;
    std::size_t k = 0;
    while (k < x.size() && ++x[k] > alpha - 1) x[k++] = 1;
    if (k == x.size()) break;
  }
  return count;
}

}  // namespace syzmirror

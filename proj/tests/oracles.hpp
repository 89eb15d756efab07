#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra: determinants are full permutation expansions and
// systems are solved by Cramer's rule.

#include "syzmirror/rational.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using syzmirror::Rational;
using syzmirror::RationalPoint;
using Matrix = std::vector<std::vector<Rational>>;

inline Rational determinant(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<Rational> cramer(const Matrix& a, const std::vector<Rational>& b) {
  const Rational d = determinant(a);
  std::vector<Rational> x;
  for (std::size_t k = 0; k < a.size(); ++k) {
    Matrix m = a;
    for (std::size_t i = 0; i < a.size(); ++i) m[i][k] = b[i];
    x.push_back(determinant(m) / d);
  }
  return x;
}

inline std::vector<RationalPoint> delta_vertices(int n, int alpha) {
  std::vector<RationalPoint> v;
  for (int i = 0; i <= n; ++i) {
    RationalPoint p(static_cast<std::size_t>(n) + 1);
    p[static_cast<std::size_t>(i)] = alpha;
    v.push_back(p);
  }
  return v;
}

// Vertices of {x : sum x = alpha, (x-s).(y-s) <= c for every vertex y}, where
// vertex k saturates every constraint except vertex k's.
inline std::vector<RationalPoint> polar_le(const std::vector<RationalPoint>& verts, int alpha, const Rational& c) {
  const std::size_t dim = verts.size();
  RationalPoint s(dim);
  for (const auto& v : verts) s += v;
  s *= Rational(1, static_cast<std::int64_t>(dim));
  std::vector<RationalPoint> out;
  for (std::size_t k = 0; k < dim; ++k) {
    Matrix a;
    std::vector<Rational> b;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == k) continue;
      const RationalPoint nrm = verts[j] - s;
      a.push_back(nrm.coords());
      b.push_back(c + syzmirror::dot(s, nrm));
    }
    a.emplace_back(dim, Rational(1));
    b.push_back(alpha);
    out.emplace_back(cramer(a, b));
  }
  return out;
}

// Number of constraints (x-s).(y-s) <= c saturated by x; -1 if one is violated.
inline int saturated_constraints(const std::vector<RationalPoint>& verts, const RationalPoint& x, const Rational& c) {
  RationalPoint s(verts.size());
  for (const auto& v : verts) s += v;
  s *= Rational(1, static_cast<std::int64_t>(verts.size()));
  int tight = 0;
  for (const auto& y : verts) {
    const Rational lhs = syzmirror::dot(x - s, y - s);
    if (lhs > c) return -1;
    tight += lhs == c;
  }
  return tight;
}

// Lattice dual of Delta(n, alpha) - s in the basis dual to e_i - e_n.
inline std::vector<RationalPoint> batyrev_vertices(int n, int alpha) {
  const auto verts = delta_vertices(n, alpha);
  const Rational s(alpha, n + 1);
  std::vector<std::vector<Rational>> shifted;
  for (const auto& v : verts) {
    std::vector<Rational> row;
    for (int j = 0; j < n; ++j) row.push_back(v[static_cast<std::size_t>(j)] - s);
    shifted.push_back(row);
  }
  std::vector<RationalPoint> out;
  for (int k = 0; k <= n; ++k) {
    Matrix a;
    for (int j = 0; j <= n; ++j) {
      if (j != k) a.push_back(shifted[static_cast<std::size_t>(j)]);
    }
    out.emplace_back(cramer(a, std::vector<Rational>(static_cast<std::size_t>(n), Rational(-1))));
  }
  return out;
}

// All lattice points x of Z^{n+1} with x_j >= 1 and sum alpha, by recursion
// over the whole box [0, alpha]^n.
inline void interior_points_rec(int n, int alpha, std::vector<long long>& prefix, std::vector<std::vector<long long>>& out,
                                long long& visited) {
  if (static_cast<int>(prefix.size()) == n) {
    ++visited;
    long long last = alpha;
    for (auto v : prefix) last -= v;
    const bool interior = last >= 1 && std::all_of(prefix.begin(), prefix.end(), [](long long v) { return v >= 1; });
    if (interior) {
      out.push_back(prefix);
      out.back().push_back(last);
    }
    return;
  }
  for (long long v = 0; v <= alpha; ++v) {
    prefix.push_back(v);
    interior_points_rec(n, alpha, prefix, out, visited);
    prefix.pop_back();
  }
}

struct LatticeScan {
  std::vector<std::vector<long long>> interior;
  long long visited = 0;
};

inline LatticeScan interior_lattice_points(int n, int alpha) {
  LatticeScan scan;
  std::vector<long long> prefix;
  interior_points_rec(n, alpha, prefix, scan.interior, scan.visited);
  return scan;
}

// Reflexive iff exactly one interior lattice point, equal to the center, and
// the lattice dual is integral.
inline bool reflexive(int n, int alpha) {
  const auto scan = interior_lattice_points(n, alpha);
  if (scan.interior.size() != 1) return false;
  for (auto v : scan.interior.front()) {
    if (Rational(v) != Rational(alpha, n + 1)) return false;
  }
  for (const auto& v : batyrev_vertices(n, alpha)) {
    if (!v.is_integral()) return false;
  }
  return true;
}

}  // namespace oracle

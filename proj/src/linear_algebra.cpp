#include "linear_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace syzmirror::detail {

namespace {

// Reduces `a` (optionally augmented with `b`) to row echelon form in place and
// returns the pivot column of each pivot row.
std::vector<std::size_t> eliminate(RationalMatrix& a, std::vector<Rational>* b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pick = row;
    while (pick < rows && a[pick][col].sign() == 0) ++pick;
    if (pick == rows) continue;
    std::swap(a[row], a[pick]);
    if (b) std::swap((*b)[row], (*b)[pick]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col].sign() == 0) continue;
      const Rational factor = a[r][col] / a[row][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
      if (b) (*b)[r] -= factor * (*b)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: right-hand side size mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("solve: matrix is not square");
  }
  const auto pivots = eliminate(a, &b);
  if (pivots.size() != n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::size_t rank(RationalMatrix a) { return eliminate(a, nullptr).size(); }

}  // namespace syzmirror::detail

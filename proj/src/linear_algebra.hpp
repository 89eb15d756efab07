#pragma once

#include "syzmirror/rational.hpp"

#include <optional>
#include <vector>

namespace syzmirror::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves A x = b by fraction-exact Gaussian elimination. A must be square.
// Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

// Row rank, exact.
std::size_t rank(RationalMatrix a);

}  // namespace syzmirror::detail

#pragma once

#include "syzmirror/moment_fibration.hpp"

#include <functional>

namespace syzmirror::detail {

enum class Extremum { kMax, kMin };

// Scores every interior grid point of facet i (chunks run on separate threads)
// and reduces deterministically: a later point replaces the incumbent only if
// it improves on it by more than a relative 1e-12, so ties keep the
// lexicographically lowest grid index regardless of scheduling.
FaceOptimum optimize_face(const Polytope& p, std::size_t i, const GridSpec& g, Extremum direction,
                          const std::function<double(std::span<const double>)>& score);

}  // namespace syzmirror::detail

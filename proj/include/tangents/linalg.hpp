#pragma once

#include <cstddef>
#include <vector>

#include "tangents/rational.hpp"

namespace tangents {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of {x : M x = 0} by exact Gauss-Jordan elimination. Pivots are the
/// first exactly nonzero entry of each column. Basis vector k has a 1 in the
/// k-th free column and 0 in the other free columns.
std::vector<std::vector<Rational>> nullspace(RationalMatrix rows, std::size_t cols);

}  // namespace tangents

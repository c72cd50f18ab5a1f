#pragma once

#include <array>
#include <vector>

#include "tangents/geometry.hpp"

namespace tangents {

enum class TransversalKind { NoReal, OneDouble, TwoReal, Infinite };

const char* to_string(TransversalKind kind);

struct TransversalResult {
  TransversalKind kind = TransversalKind::NoReal;
  std::vector<QuadLine> lines;  // root 0 first
  std::vector<bool> affine;     // false for a line at infinity
  Rational discriminant;
  int kernel_dim = 2;
  bool quadratic_vanishes = false;
};

/// Common transversals of four lines from the kernel of the 4×6 incidence
/// system restricted to the Klein quadric. Root 0 takes +√discriminant.
TransversalResult transversals(const PluckerLine& l1, const PluckerLine& l2,
                               const PluckerLine& l3, const PluckerLine& l4);
TransversalResult transversals(const std::array<PluckerLine, 4>& lines);

/// Same problem solved by intersecting l4 with the quadric through l1, l2, l3.
/// Throws GeometryError(DegenerateConfiguration) unless l1, l2, l3 are
/// pairwise skew. kernel_dim is reported as 2 except for Infinite results.
TransversalResult transversals_via_quadric(const PluckerLine& l1, const PluckerLine& l2,
                                           const PluckerLine& l3, const PluckerLine& l4);

}  // namespace tangents

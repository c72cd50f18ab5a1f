#pragma once

#include <array>
#include <vector>

#include "tangents/counter.hpp"

namespace tangents::detail {

/// Linear form on Plücker 6-vectors X = (dir, moment), kept exactly and as
/// interval enclosures of its coefficients.
struct Functional {
  std::array<Rational, 6> exact;
  std::array<IntervalF, 6> approx;
};

struct EdgeData {
  Edge edge;
  Functional row;  // X ↦ side(X, support)
  // For X coplanar with the edge, τ·M = N along the edge's parametrization.
  std::array<Functional, 3> m;
  std::array<Functional, 3> n;
  std::array<Functional, 3> m_minus_n;
};

struct EdgeTable {
  std::array<std::array<EdgeData, 3>, 4> e;
  const EdgeData& at(int tri, int label) const { return e[tri][label - 1]; }
};

EdgeTable make_edge_table(const QuadrupleOfTriangles& q);

struct QuadOutcome {
  EdgeQuad edges{};
  TransversalKind kind = TransversalKind::NoReal;
  int hits = 0;
  std::vector<Tangent> tangents;
  std::vector<GeneralPositionFailure> failures;
};

QuadOutcome solve_exact(const EdgeTable& table, const EdgeQuad& edges, bool keep_lines);
QuadOutcome solve_filtered(const EdgeTable& table, const EdgeQuad& edges, FilterStats& stats);

}  // namespace tangents::detail

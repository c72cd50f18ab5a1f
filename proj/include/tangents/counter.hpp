#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tangents/filter.hpp"
#include "tangents/geometry.hpp"
#include "tangents/transversal.hpp"

namespace tangents {

struct QuadrupleOfTriangles {
  std::array<Triangle, 4> t;
};

/// Edge labels (1..3) chosen from t1..t4, in that order.
using EdgeQuad = std::array<int, 4>;

/// The 81 edge quadruples in lexicographic order.
const std::array<EdgeQuad, 81>& all_edge_quads();

enum class FailureReason { Infinite, DoubleRoot, SharedTransversal };

const char* to_string(FailureReason reason);

struct GeneralPositionFailure {
  EdgeQuad edges{};
  FailureReason reason = FailureReason::Infinite;
  EdgeQuad other{};  // second quadruple of a SharedTransversal
};

struct GeneralPositionVerdict {
  bool in_T = true;
  std::vector<GeneralPositionFailure> failures;
};

struct Tangent {
  QuadLine line;
  EdgeQuad edges{};
  int root = 0;
};

struct TangentReport {
  int n = 0;
  std::vector<Tangent> tangents;
  GeneralPositionVerdict verdict;
  int f_count = 0;
  int i_count = 0;
  FilterStats stats;
};

enum class CountMode {
  Exact,     // serial, rational and Q(√d) arithmetic throughout
  Filtered,  // interval kernel with exact fallback
};

struct CountOptions {
  CountMode mode = CountMode::Filtered;
  bool parallel = true;  // OpenMP over the 81 edge quadruples
};

TangentReport count_tangents(const QuadrupleOfTriangles& q, CountOptions options = {});

GeneralPositionVerdict classify_general_position(const QuadrupleOfTriangles& q,
                                                 CountOptions options = {});

/// (|F|, |I|): edge quadruples with finitely / infinitely many transversals.
std::pair<int, int> partition_FI(const QuadrupleOfTriangles& q);

/// Count and verdict without materializing tangent lines. This is the
/// search fast path; it never runs in parallel internally.
struct CountSummary {
  int n = 0;
  bool in_T = true;
  int f_count = 0;
  int i_count = 0;
};

CountSummary count_summary(const QuadrupleOfTriangles& q, CountMode mode,
                           FilterStats* stats = nullptr);

/// Edge quadruples with at least one real transversal meeting all four
/// closed edges.
std::vector<EdgeQuad> tangent_carrying_quads(const QuadrupleOfTriangles& q, CountMode mode);

/// Whether `line` (coplanar with e's support) meets the closed edge. A line
/// equal to the support meets it.
bool meets_closed_edge(const QuadLine& line, const Edge& e);

}  // namespace tangents

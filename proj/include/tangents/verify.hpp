#pragma once

#include <array>
#include <ostream>
#include <string>

#include "tangents/counter.hpp"

namespace tangents {

using CoordText = std::array<std::string, 3>;
using TriangleText = std::array<CoordText, 3>;
using QuadrupleText = std::array<TriangleText, 4>;
using LineText = std::array<CoordText, 2>;  // two points

/// Built-in configurations as exact decimal strings.
struct ReferenceData {
  QuadrupleText config62;
  int config62_count = 62;
  QuadrupleText config40;
  int config40_count = 40;
  std::array<LineText, 4> lines;      // ℓ1..ℓ4
  std::array<LineText, 2> lambdas;    // their two transversals
};

const ReferenceData& builtin_reference_data();

QuadrupleOfTriangles build_quadruple(const QuadrupleText& text);
PluckerLine build_line(const LineText& text);

enum class VerifyWhich { t62, t40, lambda, all };

/// Runs the selected checks in exact arithmetic, printing one line each and
/// an expected/computed diff on failure. Returns 0 when all pass, 1 otherwise.
int run_verify(VerifyWhich which, const ReferenceData& data, std::ostream& out);

}  // namespace tangents

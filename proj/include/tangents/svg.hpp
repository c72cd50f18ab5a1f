#pragma once

#include <string>
#include <vector>

#include "tangents/counter.hpp"

namespace tangents {

/// Orthographic view along `view` of the four triangles and the given lines,
/// each line clipped to the triangles' bounding box (padded 10%). Output is
/// a deterministic function of the inputs.
std::string render_svg(const QuadrupleOfTriangles& q, const std::vector<QuadLine>& lines,
                       const Vec3<Rational>& view, int width = 800);

}  // namespace tangents

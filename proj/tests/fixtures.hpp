#pragma once

#include <cmath>
#include <random>

#include "tangents/counter.hpp"
#include "tangents/stab.hpp"
#include "tangents/verify.hpp"

namespace fixtures {

using namespace tangents;

inline Point3 pt(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

inline Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

// Integer point at the given angle (degrees) around the z-axis.
inline Point3 polar(double deg, long z, double r = 1000) {
  const double a = deg * 3.14159265358979323846 / 180.0;
  return pt(std::lround(r * std::cos(a)), std::lround(r * std::sin(a)), z);
}

inline Edge z_axis_edge() { return make_edge(pt(0, 0, -5), pt(0, 0, 5)); }

// Pencil positions are multiples of 15°; planes through the z-axis identify
// θ with θ + 180°.
struct Overlay {
  Triangle x, y, z;
};

// X spans positions 0..10 with its middle vertex at 6; Y spans 5..15.
inline Triangle overlay_x() { return Triangle(polar(150, 3), polar(0, -2), polar(90, 7)); }
inline Triangle overlay_y() {
  return Triangle(polar(225, -4, 900), polar(75, 5, 900), polar(120, -1, 900));
}

// Stabbing third triangle whose edge 3 avoids positions 0..3.
inline Overlay overlay_missing_one() {
  return {overlay_x(), overlay_y(),
          Triangle(polar(82.5, 2, 800), polar(285, -3, 800), polar(135, 4, 800))};
}

// Non-stabbing third triangle spanning positions 2..13.
inline Overlay overlay_missing_two() {
  return {overlay_x(), overlay_y(),
          Triangle(polar(195, 6, 700), polar(30, -5, 700), polar(97.5, 1, 700))};
}

// Three stabbing triangles with interleaved vertex directions.
inline Overlay all27() {
  return {Triangle(polar(0, 1), polar(120, 2), polar(240, 3)),
          Triangle(polar(40, -1, 900), polar(160, -2, 900), polar(280, -3, 900)),
          Triangle(polar(80, 4, 800), polar(200, 5, 800), polar(320, 6, 800))};
}

// Disjoint quadruple whose stab graph has 9 + 6 + 3 + 0 arcs.
inline QuadrupleOfTriangles stab18() {
  return {{Triangle(pt(0, 0, 0), pt(2, 1, 0), pt(1, 3, 0)),
           Triangle(pt(10, -100, -50), pt(10, 100, -40), pt(10, 10, 100)),
           Triangle(pt(-1000, 200, -1000), pt(1000, 200, -900), pt(50, 200, 1000)),
           Triangle(pt(-30000, -20000, 55000), pt(30000, -20000, -5000),
                    pt(0, 40000, -35000))}};
}

// Two intersecting triangles with four stab arcs between them.
// Four copies of one triangle under (x, y, z) ↦ (−y, x, ±z). Every triangle
// has weight 3; in the first the minimum-weight triangle has one stab per
// edge, in the second one of its edges stabs nothing.
inline QuadrupleOfTriangles weight3_one_stab_per_edge() {
  return {{Triangle(pt(74, -24, -52), pt(-5, 9, 1), pt(2, 23, 11)),
           Triangle(pt(24, 74, 52), pt(-9, -5, -1), pt(-23, 2, -11)),
           Triangle(pt(-74, 24, -52), pt(5, -9, 1), pt(-2, -23, 11)),
           Triangle(pt(-24, -74, 52), pt(9, 5, -1), pt(23, -2, -11))}};
}

inline QuadrupleOfTriangles weight3_free_edge() {
  return {{Triangle(pt(37, -14, -99), pt(-3, 3, -61), pt(43, 84, 42)),
           Triangle(pt(14, 37, -99), pt(-3, -3, -61), pt(-84, 43, 42)),
           Triangle(pt(-37, 14, -99), pt(3, -3, -61), pt(-43, -84, 42)),
           Triangle(pt(-14, -37, -99), pt(3, 3, -61), pt(84, -43, 42))}};
}

inline std::pair<Triangle, Triangle> crossing_pair() {
  return {Triangle(pt(0, 2, 0), pt(-2, -2, 0), Point3{q(10, 9), q(-2, 9), Rational(0)}),
          Triangle(pt(1, 0, 2), pt(3, 0, -2), Point3{q(-1, 9), Rational(0), q(-2, 9)})};
}

inline QuadrupleOfTriangles config62() { return build_quadruple(builtin_reference_data().config62); }
inline QuadrupleOfTriangles config40() { return build_quadruple(builtin_reference_data().config40); }

inline std::array<PluckerLine, 4> four_lines() {
  const auto& d = builtin_reference_data();
  return {build_line(d.lines[0]), build_line(d.lines[1]), build_line(d.lines[2]),
          build_line(d.lines[3])};
}

inline std::array<PluckerLine, 2> four_line_transversals() {
  const auto& d = builtin_reference_data();
  return {build_line(d.lambdas[0]), build_line(d.lambdas[1])};
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  Point3 point(long bound) {
    return pt(uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound));
  }
  PluckerLine line(long bound) {
    for (;;) {
      const Point3 a = point(bound);
      const Point3 b = point(bound);
      if (!(a == b)) return plucker_from_points(a, b);
    }
  }
  Triangle triangle(long bound) {
    for (;;) {
      const Point3 a = point(bound), b = point(bound), c = point(bound);
      if (!collinear(a, b, c)) return Triangle(a, b, c);
    }
  }
  // Triangle with vertices within `radius` of a random center.
  Triangle small_triangle(long bound, long radius) {
    const Point3 c = point(bound);
    for (;;) {
      std::array<Point3, 3> v;
      for (auto& p : v)
        p = c + pt(uniform(-radius, radius), uniform(-radius, radius), uniform(-radius, radius));
      if (!collinear(v[0], v[1], v[2])) return Triangle(v[0], v[1], v[2]);
    }
  }
  QuadrupleOfTriangles quadruple(long bound) {
    Triangle a = triangle(bound), b = triangle(bound), c = triangle(bound), d = triangle(bound);
    return {{a, b, c, d}};
  }
  QuadrupleOfTriangles disjoint_quadruple(long bound, long radius) {
    for (;;) {
      Triangle a = small_triangle(bound, radius), b = small_triangle(bound, radius),
               c = small_triangle(bound, radius), d = small_triangle(bound, radius);
      QuadrupleOfTriangles out{{a, b, c, d}};
      if (pairwise_disjoint(out)) return out;
    }
  }
  // Uniform quadruple conditioned on pairwise disjointness.
  QuadrupleOfTriangles disjoint_random_quadruple(long bound) {
    for (;;) {
      QuadrupleOfTriangles out = quadruple(bound);
      if (pairwise_disjoint(out)) return out;
    }
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Three lines, pairwise skew.
inline std::array<PluckerLine, 3> skew_triple(Rng& rng, long bound) {
  for (;;) {
    std::array<PluckerLine, 3> l{rng.line(bound), rng.line(bound), rng.line(bound)};
    if (sgn(side(l[0], l[1])) != 0 && sgn(side(l[0], l[2])) != 0 && sgn(side(l[1], l[2])) != 0)
      return l;
  }
}

// Line through P (a point of l1) tangent to the quadric spanned by l1, l2, l3
// without being a ruling, plus the ruling through P that meets all three.
struct TangentConstruction {
  PluckerLine tangent;
  PluckerLine ruling;
};

inline TangentConstruction tangent_at(const PluckerLine& l1, const PluckerLine& l2,
                                      const PluckerLine& l3, const Point3& p) {
  const Vec3<Rational> n2 = l2.moment - cross(p, l2.dir);
  const Vec3<Rational> n3 = l3.moment - cross(p, l3.dir);
  const Vec3<Rational> r = cross(n2, n3);
  return {plucker_from_points(p, p + l1.dir + r), plucker_from_points(p, p + r)};
}

// A triangle whose first edge lies on `line`.
inline Triangle triangle_on(const PluckerLine& line, const Point3& off) {
  const Point3 a = closest_point(line);
  return Triangle(a, a + line.dir, off);
}

}  // namespace fixtures

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "tangents/interval.hpp"
#include "tangents/quad_ext.hpp"
#include "tangents/rational.hpp"

namespace tangents {

class GeometryError : public std::runtime_error {
 public:
  enum class Kind {
    DegenerateInput,
    DegenerateConfiguration,
    InternalInconsistency,
    CoincidentLines,
    UndefinedParameter,
    Precondition,
  };
  GeometryError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

template <class S>
struct Vec3 {
  S x{};
  S y{};
  S z{};

  const S& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  S& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

using Point3 = Vec3<Rational>;

template <class A, class B>
struct Promote;
template <class S>
struct Promote<S, S> {
  using type = S;
};
template <>
struct Promote<Rational, QuadExt> {
  using type = QuadExt;
};
template <>
struct Promote<QuadExt, Rational> {
  using type = QuadExt;
};
template <class A, class B>
using promote_t = typename Promote<A, B>::type;

namespace detail {
template <class R, class A, class B>
R mul(const A& a, const B& b) {
  if constexpr (std::is_same_v<A, B>) {
    return R(a * b);
  } else {
    return R(a) * R(b);
  }
}
}  // namespace detail

template <class A, class B>
Vec3<promote_t<A, B>> operator+(const Vec3<A>& u, const Vec3<B>& v) {
  using R = promote_t<A, B>;
  return {R(R(u.x) + R(v.x)), R(R(u.y) + R(v.y)), R(R(u.z) + R(v.z))};
}
template <class A, class B>
Vec3<promote_t<A, B>> operator-(const Vec3<A>& u, const Vec3<B>& v) {
  using R = promote_t<A, B>;
  return {R(R(u.x) - R(v.x)), R(R(u.y) - R(v.y)), R(R(u.z) - R(v.z))};
}
template <class S>
Vec3<S> operator-(const Vec3<S>& u) {
  return Vec3<S>{S(-u.x), S(-u.y), S(-u.z)};
}
template <class A, class B>
Vec3<promote_t<A, B>> scale(const A& k, const Vec3<B>& v) {
  using R = promote_t<A, B>;
  return {detail::mul<R>(k, v.x), detail::mul<R>(k, v.y), detail::mul<R>(k, v.z)};
}
template <class A, class B>
promote_t<A, B> dot(const Vec3<A>& u, const Vec3<B>& v) {
  using R = promote_t<A, B>;
  R out = detail::mul<R>(u.x, v.x);
  out += detail::mul<R>(u.y, v.y);
  out += detail::mul<R>(u.z, v.z);
  return out;
}
template <class A, class B>
Vec3<promote_t<A, B>> cross(const Vec3<A>& u, const Vec3<B>& v) {
  using R = promote_t<A, B>;
  using detail::mul;
  return {R(mul<R>(u.y, v.z) - mul<R>(u.z, v.y)), R(mul<R>(u.z, v.x) - mul<R>(u.x, v.z)),
          R(mul<R>(u.x, v.y) - mul<R>(u.y, v.x))};
}
template <class S>
bool is_zero(const Vec3<S>& v) {
  return sgn(v.x) == 0 && sgn(v.y) == 0 && sgn(v.z) == 0;
}
inline bool is_zero(const Vec3<QuadExt>& v) {
  return v.x.is_zero() && v.y.is_zero() && v.z.is_zero();
}
template <class S>
bool operator==(const Vec3<S>& u, const Vec3<S>& v) {
  return u.x == v.x && u.y == v.y && u.z == v.z;
}

/// Line in projective 3-space as (direction, moment) with
/// moment = p × direction for any affine point p on the line.
template <class S>
struct Plucker {
  Vec3<S> dir;
  Vec3<S> moment;

  const S& operator[](int i) const { return i < 3 ? dir[i] : moment[i - 3]; }
  S& operator[](int i) { return i < 3 ? dir[i] : moment[i - 3]; }
};

using PluckerLine = Plucker<Rational>;
using QuadLine = Plucker<QuadExt>;
using IntervalLine = Plucker<IntervalF>;

/// Reciprocal product; zero iff the two lines are coplanar.
template <class A, class B>
auto side(const Plucker<A>& l1, const Plucker<B>& l2) {
  auto out = dot(l1.dir, l2.moment);
  out += dot(l2.dir, l1.moment);
  return out;
}

/// dir · moment; zero for every genuine line.
template <class S>
S plucker_relation(const Plucker<S>& l) {
  return dot(l.dir, l.moment);
}

PluckerLine plucker_from_points(const Point3& p, const Point3& q);

/// Line lifted into Q(√d) (all components rational).
QuadLine to_quad(const PluckerLine& l);
IntervalLine to_interval(const PluckerLine& l);
Vec3<IntervalF> to_interval(const Point3& p);
Vec3<double> to_double(const Point3& p);

/// Affine point of the line closest to the origin. Requires dir ≠ 0.
Point3 closest_point(const PluckerLine& l);

/// Projective equality: the two 6-vectors are proportional. The lines may
/// live in different quadratic fields.
bool same_line(const QuadLine& l1, const QuadLine& l2);
bool same_line(const PluckerLine& l1, const PluckerLine& l2);

struct Plane {
  Vec3<Rational> normal;
  Rational offset;  // normal · p = offset

  Rational eval(const Point3& p) const { return dot(normal, p) - offset; }
};

Plane plane_through(const Point3& a, const Point3& b, const Point3& c);

struct Edge {
  Point3 p;
  Point3 q;
  PluckerLine support;
  int owner = 0;  // triangle index 1..4, 0 when free-standing
  int label = 0;  // edge index 1..3
};

Edge make_edge(const Point3& p, const Point3& q, int owner = 0, int label = 0);

/// Closed triangle with distinct, non-collinear vertices. Edge 1 is v0v1,
/// edge 2 is v1v2, edge 3 is v2v0.
class Triangle {
 public:
  Triangle(Point3 v0, Point3 v1, Point3 v2);

  const Point3& vertex(int i) const { return v_[i]; }
  const std::array<Point3, 3>& vertices() const { return v_; }
  const Plane& plane() const { return plane_; }
  Edge edge(int label, int owner = 0) const;

 private:
  std::array<Point3, 3> v_;
  Plane plane_;
};

bool collinear(const Point3& a, const Point3& b, const Point3& c);

enum class StabResult { Misses, Stabs, InPlane };

/// Does the supporting line of `e` meet the open interior of `t`?
StabResult stab(const Edge& e, const Triangle& t);
StabResult stab_line(const PluckerLine& line, const Triangle& t);

struct SegmentHit {
  bool hit = false;
  QuadExt param;  // X = p + param·(q − p); meaningful when the lines meet
  bool parallel = false;
};

/// Where a line coplanar with e's support crosses it, and whether that
/// happens on the closed segment.
SegmentHit line_meets_segment_param(const QuadLine& line, const Edge& e);

/// Sign of det[a b c d] in homogeneous form: orientation of d against the
/// plane through a, b, c.
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

/// Exact closed triangle-triangle intersection test.
bool triangles_intersect(const Triangle& t1, const Triangle& t2);

/// Quadric in homogeneous (w, x, y, z) with coefficients ordered
/// w², wx, wy, wz, x², xy, xz, y², yz, z².
struct Quadric {
  std::array<Rational, 10> coeff;

  Rational eval(const Rational& w, const Point3& p) const;
  Rational eval(const Point3& p) const { return eval(Rational(1), p); }
  bool contains(const PluckerLine& line) const;
  bool proportional_to(const Quadric& other) const;
};

/// The unique quadric containing three pairwise skew lines.
Quadric quadric_through_three_lines(const PluckerLine& l1, const PluckerLine& l2,
                                    const PluckerLine& l3);

}  // namespace tangents

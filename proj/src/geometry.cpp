#include "tangents/geometry.hpp"

#include "tangents/linalg.hpp"

namespace tangents {
namespace {

Rational det3(const Vec3<Rational>& a, const Vec3<Rational>& b, const Vec3<Rational>& c) {
  return dot(a, cross(b, c));
}

// Drops the coordinate where the normal is largest in magnitude so the
// projection to 2D is injective on the plane.
int dominant_axis(const Vec3<Rational>& n) {
  int axis = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(n[i]) > abs(n[axis])) axis = i;
  return axis;
}

struct P2 {
  Rational u;
  Rational v;
};

P2 project(const Point3& p, int drop) {
  if (drop == 0) return {p.y, p.z};
  if (drop == 1) return {p.x, p.z};
  return {p.x, p.y};
}

int orient2d(const P2& a, const P2& b, const P2& c) {
  return sgn((b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u));
}

bool on_segment2d(const P2& a, const P2& b, const P2& p) {
  return cmp(p.u, std::min(a.u, b.u)) >= 0 && cmp(p.u, std::max(a.u, b.u)) <= 0 &&
         cmp(p.v, std::min(a.v, b.v)) >= 0 && cmp(p.v, std::max(a.v, b.v)) <= 0;
}

bool segments_meet2d(const P2& a, const P2& b, const P2& c, const P2& d) {
  const int o1 = orient2d(a, b, c);
  const int o2 = orient2d(a, b, d);
  const int o3 = orient2d(c, d, a);
  const int o4 = orient2d(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment2d(a, b, c)) return true;
  if (o2 == 0 && on_segment2d(a, b, d)) return true;
  if (o3 == 0 && on_segment2d(c, d, a)) return true;
  if (o4 == 0 && on_segment2d(c, d, b)) return true;
  return false;
}

bool in_closed_triangle2d(const P2& a, const P2& b, const P2& c, const P2& p) {
  const int s1 = orient2d(a, b, p);
  const int s2 = orient2d(b, c, p);
  const int s3 = orient2d(c, a, p);
  const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
  const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
  return !(has_neg && has_pos);
}

bool coplanar_segment_meets_triangle(const Point3& p, const Point3& q, const Triangle& t,
                                     int drop) {
  const P2 a = project(t.vertex(0), drop);
  const P2 b = project(t.vertex(1), drop);
  const P2 c = project(t.vertex(2), drop);
  const P2 pp = project(p, drop);
  const P2 qq = project(q, drop);
  if (in_closed_triangle2d(a, b, c, pp) || in_closed_triangle2d(a, b, c, qq)) return true;
  return segments_meet2d(pp, qq, a, b) || segments_meet2d(pp, qq, b, c) ||
         segments_meet2d(pp, qq, c, a);
}

bool segment_meets_triangle(const Point3& p, const Point3& q, const Triangle& t) {
  const Vec3<Rational>& n = t.plane().normal;
  const Rational dp = t.plane().eval(p);
  const Rational dq = t.plane().eval(q);
  const int sp = sgn(dp);
  const int sq = sgn(dq);
  if (sp * sq > 0) return false;
  const int drop = dominant_axis(n);
  if (sp == 0 && sq == 0) return coplanar_segment_meets_triangle(p, q, t, drop);
  const Rational tau = dp / (dp - dq);
  const Point3 x = p + scale(tau, q - p);
  return in_closed_triangle2d(project(t.vertex(0), drop), project(t.vertex(1), drop),
                              project(t.vertex(2), drop), project(x, drop));
}

Point3 point_on(const PluckerLine& l, long k) {
  return closest_point(l) + scale(Rational(k), l.dir);
}

}  // namespace

PluckerLine plucker_from_points(const Point3& p, const Point3& q) {
  Vec3<Rational> dir = q - p;
  if (is_zero(dir))
    throw GeometryError(GeometryError::Kind::DegenerateInput,
                        "plucker_from_points: coincident points");
  Vec3<Rational> moment = cross(p, dir);
  return {std::move(dir), std::move(moment)};
}

QuadLine to_quad(const PluckerLine& l) {
  return {{QuadExt(l.dir.x), QuadExt(l.dir.y), QuadExt(l.dir.z)},
          {QuadExt(l.moment.x), QuadExt(l.moment.y), QuadExt(l.moment.z)}};
}

Vec3<IntervalF> to_interval(const Point3& p) {
  return {IntervalF::enclose(p.x), IntervalF::enclose(p.y), IntervalF::enclose(p.z)};
}

IntervalLine to_interval(const PluckerLine& l) {
  return {to_interval(l.dir), to_interval(l.moment)};
}

Vec3<double> to_double(const Point3& p) { return {p.x.get_d(), p.y.get_d(), p.z.get_d()}; }

Point3 closest_point(const PluckerLine& l) {
  const Rational dd = dot(l.dir, l.dir);
  if (sgn(dd) == 0)
    throw GeometryError(GeometryError::Kind::Precondition, "closest_point: line at infinity");
  return scale(Rational(1 / dd), cross(l.dir, l.moment));
}

bool same_line(const QuadLine& l1, const QuadLine& l2) {
  int pivot = -1;
  for (int i = 0; i < 6 && pivot < 0; ++i)
    if (!l1[i].is_zero()) pivot = i;
  if (pivot < 0 || l2[pivot].is_zero()) return false;
  // Scale each line so the pivot component is 1; the comparison then works
  // even when the two lines live over different quadratic fields.
  const QuadExt inv1 = l1[pivot].inverse();
  const QuadExt inv2 = l2[pivot].inverse();
  for (int j = 0; j < 6; ++j) {
    if (j == pivot) continue;
    if (quad_compare(l1[j] * inv1, l2[j] * inv2) != 0) return false;
  }
  return true;
}

bool same_line(const PluckerLine& l1, const PluckerLine& l2) {
  int pivot = -1;
  for (int i = 0; i < 6 && pivot < 0; ++i)
    if (sgn(l1[i]) != 0) pivot = i;
  if (pivot < 0 || sgn(l2[pivot]) == 0) return false;
  for (int j = 0; j < 6; ++j)
    if (l1[j] * l2[pivot] != l2[j] * l1[pivot]) return false;
  return true;
}

Plane plane_through(const Point3& a, const Point3& b, const Point3& c) {
  Vec3<Rational> n = cross(b - a, c - a);
  if (is_zero(n))
    throw GeometryError(GeometryError::Kind::DegenerateInput, "plane_through: collinear points");
  Rational offset = dot(n, a);
  return {std::move(n), std::move(offset)};
}

Edge make_edge(const Point3& p, const Point3& q, int owner, int label) {
  return {p, q, plucker_from_points(p, q), owner, label};
}

bool collinear(const Point3& a, const Point3& b, const Point3& c) {
  return is_zero(cross(b - a, c - a));
}

Triangle::Triangle(Point3 v0, Point3 v1, Point3 v2) : v_{std::move(v0), std::move(v1), std::move(v2)} {
  if (collinear(v_[0], v_[1], v_[2]))
    throw GeometryError(GeometryError::Kind::DegenerateInput,
                        "triangle vertices are coincident or collinear");
  plane_ = plane_through(v_[0], v_[1], v_[2]);
}

Edge Triangle::edge(int label, int owner) const {
  switch (label) {
    case 1: return make_edge(v_[0], v_[1], owner, 1);
    case 2: return make_edge(v_[1], v_[2], owner, 2);
    case 3: return make_edge(v_[2], v_[0], owner, 3);
    default:
      throw GeometryError(GeometryError::Kind::Precondition, "edge label must be 1, 2 or 3");
  }
}

StabResult stab_line(const PluckerLine& line, const Triangle& t) {
  const Plane& pl = t.plane();
  if (sgn(dot(pl.normal, line.dir)) == 0) {
    if (sgn(pl.eval(closest_point(line))) == 0) return StabResult::InPlane;
    return StabResult::Misses;
  }
  int first = 0;
  for (int k = 1; k <= 3; ++k) {
    const int s = sgn(side(line, t.edge(k).support));
    if (s == 0) return StabResult::Misses;
    if (first == 0) first = s;
    else if (s != first) return StabResult::Misses;
  }
  return StabResult::Stabs;
}

StabResult stab(const Edge& e, const Triangle& t) { return stab_line(e.support, t); }

SegmentHit line_meets_segment_param(const QuadLine& line, const Edge& e) {
  const Vec3<Rational> u = e.q - e.p;
  const Vec3<QuadExt> m = cross(u, line.dir);
  const Vec3<QuadExt> n = line.moment - cross(e.p, line.dir);
  SegmentHit out;
  for (int k = 0; k < 3; ++k) {
    const int sm = quad_sign(m[k]);
    if (sm == 0) continue;
    const int sn = quad_sign(n[k]);
    const int sr = quad_sign(m[k] - n[k]);
    out.hit = sn * sm >= 0 && sr * sm >= 0;
    out.param = n[k] / m[k];
    return out;
  }
  if (is_zero(n))
    throw GeometryError(GeometryError::Kind::CoincidentLines,
                        "line_meets_segment_param: line coincides with the edge");
  out.parallel = true;
  return out;
}

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return sgn(det3(b - a, c - a, d - a));
}

bool triangles_intersect(const Triangle& t1, const Triangle& t2) {
  int s2[3];
  int s1[3];
  for (int i = 0; i < 3; ++i) {
    s2[i] = sgn(t1.plane().eval(t2.vertex(i)));
    s1[i] = sgn(t2.plane().eval(t1.vertex(i)));
  }
  auto one_side = [](const int* s) {
    return (s[0] > 0 && s[1] > 0 && s[2] > 0) || (s[0] < 0 && s[1] < 0 && s[2] < 0);
  };
  if (one_side(s1) || one_side(s2)) return false;

  for (int k = 1; k <= 3; ++k) {
    const Edge e1 = t1.edge(k);
    if (segment_meets_triangle(e1.p, e1.q, t2)) return true;
    const Edge e2 = t2.edge(k);
    if (segment_meets_triangle(e2.p, e2.q, t1)) return true;
  }
  return false;
}

Rational Quadric::eval(const Rational& w, const Point3& p) const {
  const std::array<const Rational*, 4> h{&w, &p.x, &p.y, &p.z};
  Rational out = 0;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) out += coeff[k++] * *h[i] * *h[j];
  return out;
}

bool Quadric::contains(const PluckerLine& line) const {
  for (long k = 0; k < 3; ++k)
    if (sgn(eval(point_on(line, k))) != 0) return false;
  return true;
}

bool Quadric::proportional_to(const Quadric& other) const {
  int pivot = -1;
  for (int i = 0; i < 10 && pivot < 0; ++i)
    if (sgn(coeff[i]) != 0) pivot = i;
  if (pivot < 0 || sgn(other.coeff[pivot]) == 0) return false;
  for (int j = 0; j < 10; ++j)
    if (coeff[j] * other.coeff[pivot] != other.coeff[j] * coeff[pivot]) return false;
  return true;
}

Quadric quadric_through_three_lines(const PluckerLine& l1, const PluckerLine& l2,
                                    const PluckerLine& l3) {
  const std::array<const PluckerLine*, 3> lines{&l1, &l2, &l3};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (sgn(side(*lines[i], *lines[j])) == 0)
        throw GeometryError(GeometryError::Kind::DegenerateConfiguration,
                            "quadric_through_three_lines: lines are not pairwise skew");

  RationalMatrix rows;
  for (const PluckerLine* l : lines) {
    for (long k = 0; k < 3; ++k) {
      const Point3 p = point_on(*l, k);
      const std::array<Rational, 4> h{Rational(1), p.x, p.y, p.z};
      std::vector<Rational> row;
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) row.push_back(h[i] * h[j]);
      rows.push_back(std::move(row));
    }
  }
  auto kernel = nullspace(std::move(rows), 10);
  if (kernel.size() != 1)
    throw GeometryError(GeometryError::Kind::InternalInconsistency,
                        "quadric_through_three_lines: kernel dimension " +
                            std::to_string(kernel.size()));
  Quadric q;
  for (int i = 0; i < 10; ++i) q.coeff[i] = kernel[0][i];
  return q;
}

}  // namespace tangents

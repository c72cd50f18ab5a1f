#include "tangents/transversal.hpp"

#include "tangents/linalg.hpp"

namespace tangents {
namespace {

PluckerLine as_line(const std::vector<Rational>& v) {
  return {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
}

QuadLine combine(const QuadExt& alpha, const PluckerLine& a, const QuadExt& beta,
                 const PluckerLine& b) {
  QuadLine out;
  for (int i = 0; i < 6; ++i) out[i] = alpha * QuadExt(a[i]) + beta * QuadExt(b[i]);
  return out;
}

void push_root(TransversalResult& r, QuadLine line) {
  r.affine.push_back(!is_zero(line.dir));
  r.lines.push_back(std::move(line));
}

TransversalKind kind_of(const Rational& disc) {
  const int s = sgn(disc);
  if (s < 0) return TransversalKind::NoReal;
  if (s == 0) return TransversalKind::OneDouble;
  return TransversalKind::TwoReal;
}

struct HomPoint {
  QuadExt w;
  Vec3<QuadExt> x;
};

struct HomPlane {
  Vec3<QuadExt> n;
  QuadExt c;
};

HomPlane plane_through(const HomPoint& p, const PluckerLine& l) {
  const Vec3<QuadExt> d = to_quad(l).dir;
  const Vec3<QuadExt> m = to_quad(l).moment;
  return {scale(p.w, m) - cross(p.x, d), dot(m, p.x)};
}

QuadLine meet(const HomPlane& a, const HomPlane& b) {
  return {cross(a.n, b.n), scale(b.c, a.n) - scale(a.c, b.n)};
}

bool on_line(const HomPoint& p, const PluckerLine& l) {
  // w·m = x × d, with p at infinity lying on l iff x ∥ d
  const QuadLine q = to_quad(l);
  return is_zero(scale(p.w, q.moment) - cross(p.x, q.dir));
}

QuadLine transversal_through(const HomPoint& r, const std::array<const PluckerLine*, 3>& base) {
  std::array<const PluckerLine*, 2> use{};
  int k = 0;
  for (const PluckerLine* l : base)
    if (k < 2 && !on_line(r, *l)) use[k++] = l;
  return meet(plane_through(r, *use[0]), plane_through(r, *use[1]));
}

}  // namespace

const char* to_string(TransversalKind kind) {
  switch (kind) {
    case TransversalKind::NoReal: return "NoReal";
    case TransversalKind::OneDouble: return "OneDouble";
    case TransversalKind::TwoReal: return "TwoReal";
    case TransversalKind::Infinite: return "Infinite";
  }
  return "?";
}

TransversalResult transversals(const std::array<PluckerLine, 4>& lines) {
  RationalMatrix rows;
  for (const auto& l : lines)
    rows.push_back({l.moment.x, l.moment.y, l.moment.z, l.dir.x, l.dir.y, l.dir.z});
  const auto kernel = nullspace(std::move(rows), 6);

  TransversalResult r;
  r.kernel_dim = static_cast<int>(kernel.size());
  if (r.kernel_dim < 2)
    throw GeometryError(GeometryError::Kind::InternalInconsistency,
                        "transversals: kernel dimension below 2");
  if (r.kernel_dim > 2) {
    r.kind = TransversalKind::Infinite;
    return r;
  }

  const PluckerLine a = as_line(kernel[0]);
  const PluckerLine b = as_line(kernel[1]);
  const Rational p = plucker_relation(a);
  const Rational c = plucker_relation(b);
  const Rational h = side(a, b);
  r.discriminant = h * h - 4 * p * c;

  if (sgn(p) == 0 && sgn(c) == 0 && sgn(h) == 0) {
    r.kind = TransversalKind::Infinite;
    r.quadratic_vanishes = true;
    return r;
  }
  r.kind = kind_of(r.discriminant);
  if (r.kind == TransversalKind::NoReal) return r;

  const int roots = r.kind == TransversalKind::TwoReal ? 2 : 1;
  for (int i = 0; i < roots; ++i) {
    const QuadExt t(Rational(-h), Rational(i == 0 ? 1 : -1), r.discriminant);
    if (sgn(p) != 0)
      push_root(r, combine(t, a, QuadExt(Rational(2 * p)), b));
    else if (sgn(c) != 0)
      push_root(r, combine(QuadExt(Rational(2 * c)), a, t, b));
    else
      push_root(r, i == 0 ? to_quad(a) : to_quad(b));
  }
  return r;
}

TransversalResult transversals(const PluckerLine& l1, const PluckerLine& l2,
                               const PluckerLine& l3, const PluckerLine& l4) {
  return transversals(std::array<PluckerLine, 4>{l1, l2, l3, l4});
}

TransversalResult transversals_via_quadric(const PluckerLine& l1, const PluckerLine& l2,
                                           const PluckerLine& l3, const PluckerLine& l4) {
  const Quadric q = quadric_through_three_lines(l1, l2, l3);
  const Point3 p4 = closest_point(l4);
  const Vec3<Rational>& u4 = l4.dir;

  const Rational c_ss = q.eval(Rational(1), p4);
  const Rational c_tt = q.eval(Rational(0), u4);
  const Rational c_st = q.eval(Rational(1), p4 + u4) - c_ss - c_tt;

  TransversalResult r;
  if (sgn(c_ss) == 0 && sgn(c_st) == 0 && sgn(c_tt) == 0) {
    r.kind = TransversalKind::Infinite;
    r.quadratic_vanishes = true;
    return r;
  }
  r.discriminant = c_st * c_st - 4 * c_ss * c_tt;
  r.kind = kind_of(r.discriminant);
  if (r.kind == TransversalKind::NoReal) return r;

  const std::array<const PluckerLine*, 3> base{&l1, &l2, &l3};
  const Vec3<QuadExt> p4q{p4.x, p4.y, p4.z};
  const Vec3<QuadExt> u4q{u4.x, u4.y, u4.z};
  const int roots = r.kind == TransversalKind::TwoReal ? 2 : 1;
  for (int i = 0; i < roots; ++i) {
    const QuadExt t(Rational(-c_st), Rational(i == 0 ? 1 : -1), r.discriminant);
    HomPoint point;
    if (sgn(c_tt) != 0) {
      const QuadExt w(Rational(2 * c_tt));
      point = {w, scale(w, p4q) + scale(t, u4q)};
    } else if (sgn(c_ss) != 0) {
      point = {t, scale(t, p4q) + scale(QuadExt(Rational(2 * c_ss)), u4q)};
    } else {
      point = i == 0 ? HomPoint{QuadExt(0), u4q} : HomPoint{QuadExt(1), p4q};
    }
    push_root(r, transversal_through(point, base));
  }
  return r;
}

}  // namespace tangents

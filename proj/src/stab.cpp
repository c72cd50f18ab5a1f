#include "tangents/stab.hpp"

#include <algorithm>

namespace tangents {
namespace {

std::vector<PencilParam> sorted_unique(std::vector<PencilParam> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// One parameter per breakpoint and one inside each gap between consecutive
// breakpoints, including the gap through ∞.
std::vector<PencilParam> sweep_samples(const std::vector<PencilParam>& breaks) {
  std::vector<PencilParam> out = breaks;
  if (breaks.empty()) {
    out.push_back(PencilParam::value(Rational(0)));
    return out;
  }
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1].is_infinity())
      out.push_back(PencilParam::value(breaks[i].s + 1));
    else
      out.push_back(PencilParam::value((breaks[i].s + breaks[i + 1].s) / 2));
  }
  const PencilParam& last = breaks.back();
  if (!last.is_infinity())
    out.push_back(PencilParam::infinity());
  else if (breaks.size() > 1)
    out.push_back(PencilParam::value(breaks.front().s - 1));
  else
    out.push_back(PencilParam::value(Rational(0)));
  return out;
}

Rational pencil_eval(const PencilBasis& b, const PencilParam& param, const Point3& x) {
  const Vec3<Rational> r = x - b.p;
  return param.s * dot(b.n1, r) + param.t * dot(b.n2, r);
}

}  // namespace

PencilParam PencilParam::canonical(const Rational& s, const Rational& t) {
  if (sgn(t) == 0) {
    if (sgn(s) == 0)
      throw GeometryError(GeometryError::Kind::UndefinedParameter, "pencil parameter (0:0)");
    return infinity();
  }
  return value(s / t);
}

int compare(const PencilParam& a, const PencilParam& b) {
  const bool ia = a.is_infinity();
  const bool ib = b.is_infinity();
  if (ia || ib) return static_cast<int>(ia) - static_cast<int>(ib);
  return cmp(a.s, b.s);
}

PencilBasis pencil_basis(const Edge& e) {
  const Vec3<Rational> u = e.q - e.p;
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(u[i]) < abs(u[k])) k = i;
  Vec3<Rational> axis;
  axis[k] = 1;
  Vec3<Rational> n1 = cross(u, axis);
  Vec3<Rational> n2 = cross(n1, u);
  return {e.p, std::move(n1), std::move(n2)};
}

PencilParam pencil_param_of_point(const Edge& e, const Point3& x) {
  const PencilBasis b = pencil_basis(e);
  const Vec3<Rational> r = x - b.p;
  const Rational a = dot(b.n1, r);
  const Rational bb = dot(b.n2, r);
  if (sgn(a) == 0 && sgn(bb) == 0)
    throw GeometryError(GeometryError::Kind::UndefinedParameter,
                        "pencil_param_of_point: point on the base line");
  return PencilParam::canonical(bb, -a);
}

bool plane_meets_segment(const Edge& e, const PencilParam& param, const Edge& f) {
  const PencilBasis b = pencil_basis(e);
  return sgn(pencil_eval(b, param, f.p)) * sgn(pencil_eval(b, param, f.q)) <= 0;
}

bool Arc::contains(const PencilParam& x) const {
  switch (kind) {
    case ArcKind::FullCircle: return true;
    case ArcKind::SinglePoint: return x == start;
    case ArcKind::Regular: break;
  }
  if (!wraps) return compare(start, x) <= 0 && compare(x, end) <= 0;
  return compare(x, start) >= 0 || compare(x, end) <= 0;
}

Arc arc_of_edge(const Edge& e, const Edge& f) {
  Arc arc;
  arc.edge_label = {f.owner, f.label};
  const PencilParam a = pencil_param_of_point(e, f.p);
  const PencilParam b = pencil_param_of_point(e, f.q);

  if (sgn(side(e.support, f.support)) == 0) {
    // f lies in one plane of the pencil
    const Vec3<Rational> u = e.q - e.p;
    const Vec3<Rational> w = f.q - f.p;
    const bool parallel = is_zero(cross(u, w));
    bool crosses = false;
    if (!parallel) {
      // f.p + λ w meets the base line where (f.p − e.p + λ w) × u = 0
      const Vec3<Rational> n = cross(f.p - e.p, u);
      const Vec3<Rational> m = cross(w, u);
      for (int k = 0; k < 3; ++k) {
        if (sgn(m[k]) == 0) continue;
        const Rational lambda = -n[k] / m[k];
        crosses = sgn(lambda) > 0 && cmp(lambda, 1) < 0;
        break;
      }
    }
    arc.kind = crosses ? ArcKind::FullCircle : ArcKind::SinglePoint;
    arc.start = a;
    arc.end = a;
    return arc;
  }

  Point3 mid = scale(Rational(1, 2), f.p + f.q);
  const PencilParam m = pencil_param_of_point(e, mid);
  const PencilParam& lo = a < b ? a : b;
  const PencilParam& hi = a < b ? b : a;
  arc.kind = ArcKind::Regular;
  if (lo < m && m < hi) {
    arc.start = lo;
    arc.end = hi;
    arc.wraps = false;
  } else {
    arc.start = hi;
    arc.end = lo;
    arc.wraps = true;
  }
  return arc;
}

std::vector<PencilParam> StabDiagram::breakpoints() const {
  std::vector<PencilParam> v;
  for (const Arc& a : arcs) {
    if (a.kind == ArcKind::FullCircle) continue;
    v.push_back(a.start);
    v.push_back(a.end);
  }
  return sorted_unique(std::move(v));
}

bool StabDiagram::covers_all() const {
  for (const PencilParam& x : sweep_samples(breakpoints())) {
    bool covered = false;
    for (const Arc& a : arcs) covered = covered || a.contains(x);
    if (!covered) return false;
  }
  return true;
}

StabDiagram build_diagram(const Edge& e, const Triangle& t, int target) {
  StabDiagram d;
  d.base = e;
  d.target = target;
  for (int k = 1; k <= 3; ++k) d.arcs[k - 1] = arc_of_edge(e, t.edge(k, target));
  d.stabbing = stab(e, t) == StabResult::Stabs;
  return d;
}

std::set<Triple> contributing_triples(const std::array<StabDiagram, 3>& diagrams) {
  std::vector<PencilParam> breaks;
  for (const auto& d : diagrams) {
    const auto b = d.breakpoints();
    breaks.insert(breaks.end(), b.begin(), b.end());
  }
  std::set<Triple> out;
  for (const PencilParam& x : sweep_samples(sorted_unique(std::move(breaks)))) {
    std::array<std::vector<int>, 3> active;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (diagrams[j].arcs[k].contains(x)) active[j].push_back(k + 1);
    for (int a : active[0])
      for (int b : active[1])
        for (int c : active[2]) out.insert({a, b, c});
  }
  return out;
}

std::set<Triple> contributing_triples(const Edge& e,
                                      const std::array<const Triangle*, 3>& others) {
  return contributing_triples(std::array<StabDiagram, 3>{
      build_diagram(e, *others[0], 1), build_diagram(e, *others[1], 2),
      build_diagram(e, *others[2], 3)});
}

int StabGraph::weight(int triangle) const {
  return static_cast<int>(
      std::count_if(arcs.begin(), arcs.end(), [&](const Entry& a) { return a.owner == triangle; }));
}

int StabGraph::arcs_between(int a, int b) const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [&](const Entry& x) {
    return (x.owner == a && x.target == b) || (x.owner == b && x.target == a);
  }));
}

StabGraph build_stab_graph(const QuadrupleOfTriangles& q) {
  StabGraph g;
  for (int a = 0; a < 4; ++a)
    for (int label = 1; label <= 3; ++label) {
      const Edge e = q.t[a].edge(label, a + 1);
      for (int b = 0; b < 4; ++b) {
        if (b == a) continue;
        const StabResult r = stab(e, q.t[b]);
        if (r == StabResult::Stabs) g.arcs.push_back({a + 1, label, b + 1});
        if (r == StabResult::InPlane) g.in_plane.push_back({a + 1, label, b + 1});
      }
    }
  return g;
}

bool pairwise_disjoint(const QuadrupleOfTriangles& q) {
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (triangles_intersect(q.t[a], q.t[b])) return false;
  return true;
}

ContributingQuadruples contributing_quadruples(const QuadrupleOfTriangles& q) {
  if (!pairwise_disjoint(q))
    throw GeometryError(GeometryError::Kind::Precondition,
                        "contributing_quadruples: triangles are not pairwise disjoint");
  const StabGraph g = build_stab_graph(q);
  ContributingQuadruples out;
  out.triangle = 1;
  out.weight = g.weight(1);
  for (int t = 2; t <= 4; ++t)
    if (g.weight(t) < out.weight) {
      out.triangle = t;
      out.weight = g.weight(t);
    }

  const int base = out.triangle - 1;
  std::array<const Triangle*, 3> others{};
  std::array<int, 3> slot{};
  for (int t = 0, j = 0; t < 4; ++t)
    if (t != base) {
      others[j] = &q.t[t];
      slot[j++] = t;
    }
  for (int label = 1; label <= 3; ++label) {
    const auto triples = contributing_triples(q.t[base].edge(label, base + 1), others);
    out.per_edge[label - 1] = static_cast<int>(triples.size());
    for (const Triple& tr : triples) {
      EdgeQuad quad{};
      quad[base] = label;
      for (int j = 0; j < 3; ++j) quad[slot[j]] = tr[j];
      out.quads.insert(quad);
    }
  }
  return out;
}

int contributing_quadruple_count(const QuadrupleOfTriangles& q) {
  return contributing_quadruples(q).count();
}

}  // namespace tangents

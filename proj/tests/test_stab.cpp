#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tangents/stab.hpp"

using namespace tangents;
using fixtures::pt;
using fixtures::q;

namespace {

const Edge x_axis = make_edge(pt(0, 0, 0), pt(1, 0, 0));

std::set<Triple> all_triples() {
  std::set<Triple> out;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) out.insert({a, b, c});
  return out;
}

std::set<Triple> missing(const std::set<Triple>& found) {
  std::set<Triple> out;
  for (const Triple& t : all_triples())
    if (!found.count(t)) out.insert(t);
  return out;
}

std::set<Triple> overlay_triples(const fixtures::Overlay& o) {
  return contributing_triples(fixtures::z_axis_edge(), {&o.x, &o.y, &o.z});
}

std::array<bool, 3> overlay_stabs(const fixtures::Overlay& o) {
  const Edge e = fixtures::z_axis_edge();
  return {stab(e, o.x) == StabResult::Stabs, stab(e, o.y) == StabResult::Stabs,
          stab(e, o.z) == StabResult::Stabs};
}

}  // namespace

TEST(Pencil, XAxisExamples) {
  EXPECT_TRUE(pencil_param_of_point(x_axis, pt(0, 1, 0)).is_infinity());
  EXPECT_EQ(pencil_param_of_point(x_axis, pt(0, 0, 1)), PencilParam::value(Rational(0)));
  EXPECT_EQ(pencil_param_of_point(x_axis, pt(0, 1, 1)), PencilParam::value(Rational(-1)));
  EXPECT_EQ(pencil_param_of_point(x_axis, pt(7, 2, 2)), PencilParam::value(Rational(-1)));
  EXPECT_THROW(pencil_param_of_point(x_axis, pt(5, 0, 0)), GeometryError);
}

TEST(Pencil, ParameterPlaneContainsPoint) {
  fixtures::Rng rng(61);
  for (int i = 0; i < 500; ++i) {
    const Point3 a = rng.point(20), b = rng.point(20), x = rng.point(20);
    if (a == b || collinear(a, b, x)) continue;
    const Edge e = make_edge(a, b);
    const PencilParam p = pencil_param_of_point(e, x);
    // a plane through the base line and x: every point of it gets the same parameter
    const Point3 y = x + scale(Rational(3), b - a);
    const Point3 z = a + scale(q(1, 2), x - a);
    EXPECT_EQ(pencil_param_of_point(e, y), p);
    EXPECT_EQ(pencil_param_of_point(e, z), p);
    EXPECT_TRUE(plane_meets_segment(e, p, make_edge(x, rng.point(20))));
  }
}

TEST(Arc, MidpointSelectsSide) {
  const Arc arc = arc_of_edge(x_axis, make_edge(pt(0, 1, 0), pt(0, 0, 1)));
  EXPECT_EQ(arc.kind, ArcKind::Regular);
  EXPECT_TRUE(arc.contains(PencilParam::value(Rational(-1))));
  EXPECT_TRUE(arc.contains(PencilParam::infinity()));
  EXPECT_TRUE(arc.contains(PencilParam::value(Rational(0))));
  EXPECT_FALSE(arc.contains(PencilParam::value(Rational(1))));
}

TEST(Arc, SymmetricEdge) {
  const Arc arc = arc_of_edge(x_axis, make_edge(pt(0, 1, 1), pt(0, 1, -1)));
  EXPECT_TRUE(arc.wraps);
  EXPECT_EQ(arc.start, PencilParam::value(Rational(1)));
  EXPECT_EQ(arc.end, PencilParam::value(Rational(-1)));
}

TEST(Arc, EndpointOnBaseLineThrows) {
  try {
    arc_of_edge(x_axis, make_edge(pt(3, 0, 0), pt(0, 1, 1)));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), GeometryError::Kind::UndefinedParameter);
  }
}

TEST(Arc, CoplanarKinds) {
  EXPECT_EQ(arc_of_edge(x_axis, make_edge(pt(2, 1, 1), pt(2, -1, -1))).kind, ArcKind::FullCircle);
  const Arc single = arc_of_edge(x_axis, make_edge(pt(2, 1, 1), pt(5, 3, 3)));
  EXPECT_EQ(single.kind, ArcKind::SinglePoint);
  EXPECT_TRUE(single.contains(PencilParam::value(Rational(-1))));
  EXPECT_FALSE(single.contains(PencilParam::value(Rational(-2))));
}

TEST(Arc, MembershipMatchesPlaneTest) {
  fixtures::Rng rng(62);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Point3 a = rng.point(20), b = rng.point(20), c = rng.point(20), d = rng.point(20);
    if (a == b || c == d || collinear(a, b, c) || collinear(a, b, d)) continue;
    const Edge e = make_edge(a, b);
    const Edge f = make_edge(c, d);
    const Arc arc = arc_of_edge(e, f);
    std::vector<PencilParam> params{arc.start, arc.end, PencilParam::infinity()};
    for (int k = 0; k < 100; ++k) params.push_back(PencilParam::value(q(rng.uniform(-400, 400), 
                                                                      rng.uniform(1, 40))));
    for (const auto& p : params) EXPECT_EQ(arc.contains(p), plane_meets_segment(e, p, f));
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(Diagram, StabbingCoversPencil) {
  const Edge e = fixtures::z_axis_edge();
  const StabDiagram d = build_diagram(e, Triangle(pt(3, 0, 1), pt(-2, 2, -1), pt(-1, -3, 2)));
  EXPECT_TRUE(d.stabbing);
  EXPECT_TRUE(d.covers_all());
}

TEST(Diagram, NonStabbingLeavesGap) {
  const Edge e = fixtures::z_axis_edge();
  const StabDiagram d = build_diagram(e, Triangle(pt(3, 1, 1), pt(6, 1, -1), pt(4, 5, 2)));
  EXPECT_FALSE(d.stabbing);
  EXPECT_FALSE(d.covers_all());
  // two ends and one interior vertex
  EXPECT_EQ(d.breakpoints().size(), 3u);
}

TEST(Diagram, TouchingEdgeClosesTheGap) {
  // the z-axis crosses the edge from (2, -2, 0) to (-2, 2, 1) at (0, 0, 1/2)
  const Edge e = fixtures::z_axis_edge();
  const Triangle t(pt(2, -2, 0), pt(-2, 2, 1), pt(3, 3, 2));
  EXPECT_EQ(stab(e, t), StabResult::Misses);
  const StabDiagram d = build_diagram(e, t);
  EXPECT_FALSE(d.stabbing);
  EXPECT_EQ(d.arcs[0].kind, ArcKind::FullCircle);
  EXPECT_TRUE(d.covers_all());
}

TEST(Diagram, CoversAllIffStabbing) {
  fixtures::Rng rng(63);
  int stabbing = 0;
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = rng.triangle(20);
    const Point3 a = rng.point(20), b = rng.point(20);
    if (a == b) continue;
    const Edge e = make_edge(a, b);
    try {
      const StabDiagram d = build_diagram(e, t);
      if (d.arcs[0].kind != ArcKind::Regular || d.arcs[1].kind != ArcKind::Regular ||
          d.arcs[2].kind != ArcKind::Regular)
        continue;
      EXPECT_EQ(d.covers_all(), d.stabbing);
      stabbing += d.stabbing;
    } catch (const GeometryError&) {
    }
  }
  EXPECT_GT(stabbing, 50);
}

TEST(ContributingTriples, MissingOneTriple) {
  const auto o = fixtures::overlay_missing_one();
  const auto found = overlay_triples(o);
  EXPECT_EQ(found.size(), 26u);
  EXPECT_EQ(missing(found), (std::set<Triple>{{2, 3, 3}}));
  EXPECT_EQ(overlay_stabs(o), (std::array<bool, 3>{false, false, true}));
}

TEST(ContributingTriples, MissingTwoTriples) {
  const auto o = fixtures::overlay_missing_two();
  const auto found = overlay_triples(o);
  EXPECT_EQ(found.size(), 25u);
  EXPECT_EQ(missing(found), (std::set<Triple>{{2, 2, 3}, {3, 3, 2}}));
  EXPECT_EQ(overlay_stabs(o), (std::array<bool, 3>{false, false, false}));
}

TEST(ContributingTriples, AllTwentySeven) {
  const auto o = fixtures::all27();
  EXPECT_EQ(overlay_triples(o).size(), 27u);
  const auto s = overlay_stabs(o);
  EXPECT_GE(s[0] + s[1] + s[2], 2);
}

TEST(ContributingTriples, BoundsByStabCount) {
  fixtures::Rng rng(64);
  std::array<int, 4> by_stabs{};
  for (int i = 0; i < 1500; ++i) {
    const Point3 a = rng.point(30), b = rng.point(30);
    if (a == b) continue;
    const Edge e = make_edge(a, b);
    const Triangle t1 = rng.small_triangle(30, 15), t2 = rng.small_triangle(30, 15),
                   t3 = rng.small_triangle(30, 15);
    int stabs = 0;
    for (const Triangle* t : {&t1, &t2, &t3}) stabs += stab(e, *t) == StabResult::Stabs;
    std::set<Triple> found;
    try {
      found = contributing_triples(e, {&t1, &t2, &t3});
    } catch (const GeometryError&) {
      continue;
    }
    ++by_stabs[stabs];
    EXPECT_LE(found.size(), 27u);
    if (stabs == 1) EXPECT_LE(found.size(), 26u);
    if (stabs == 0) EXPECT_LE(found.size(), 25u);
  }
  EXPECT_GT(by_stabs[0], 100);
  EXPECT_GT(by_stabs[1], 50);
}

TEST(StabGraph, EighteenArcWitness) {
  const auto quad = fixtures::stab18();
  ASSERT_TRUE(pairwise_disjoint(quad));
  const StabGraph g = build_stab_graph(quad);
  EXPECT_EQ(g.arcs.size(), 18u);
  EXPECT_EQ(g.weight(1), 9);
  EXPECT_EQ(g.weight(2), 6);
  EXPECT_EQ(g.weight(3), 3);
  EXPECT_EQ(g.weight(4), 0);
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) EXPECT_LE(g.arcs_between(a, b), 3);
}

TEST(StabGraph, AllEdgesStabOneWay) {
  const auto quad = fixtures::stab18();
  const StabGraph g = build_stab_graph(quad);
  int forward = 0, back = 0;
  for (const auto& a : g.arcs) {
    forward += a.owner == 1 && a.target == 2;
    back += a.owner == 2 && a.target == 1;
  }
  EXPECT_EQ(forward, 3);
  EXPECT_EQ(back, 0);
}

TEST(StabGraph, CrossingPairHasFour) {
  const auto [t, u] = fixtures::crossing_pair();
  const QuadrupleOfTriangles quad{{t, u, Triangle(pt(1000, 0, 0), pt(1001, 0, 0), pt(1000, 1, 1)),
                                   Triangle(pt(0, 1000, 7), pt(1, 1000, 7), pt(0, 1001, 8))}};
  EXPECT_FALSE(pairwise_disjoint(quad));
  EXPECT_EQ(build_stab_graph(quad).arcs_between(1, 2), 4);
  EXPECT_THROW(contributing_quadruples(quad), GeometryError);
}

TEST(StabGraph, FarApartHasNone) {
  auto tiny = [](long x, long y, long z) {
    return Triangle(pt(x, y, z), pt(x + 1, y, z), pt(x, y + 1, z + 1));
  };
  const QuadrupleOfTriangles quad{
      {tiny(1000, 0, 0), tiny(0, 1000, 0), tiny(0, 0, 1000), tiny(-700, -600, -500)}};
  EXPECT_TRUE(build_stab_graph(quad).arcs.empty());
  EXPECT_EQ(contributing_quadruple_count(quad), 0);
}

TEST(ContributingQuadruples, BoundAndSoundness) {
  fixtures::Rng rng(65);
  int with_tangents = 0;
  for (int i = 0; i < 200; ++i) {
    const auto quad = rng.disjoint_random_quadruple(1000);
    ContributingQuadruples c;
    try {
      c = contributing_quadruples(quad);
    } catch (const GeometryError&) {
      continue;
    }
    const StabGraph g = build_stab_graph(quad);
    EXPECT_LE(g.arcs.size(), 18u);
    EXPECT_LE(c.weight, 3);
    EXPECT_LE(c.count(), 78);
    const auto carrying = tangent_carrying_quads(quad, CountMode::Filtered);
    for (const EdgeQuad& e : carrying) EXPECT_TRUE(c.quads.count(e)) << i;
    with_tangents += !carrying.empty();
  }
  EXPECT_GT(with_tangents, 40);
}

TEST(ContributingQuadruples, EighteenArcWitnessUsesWeightZero) {
  const ContributingQuadruples c = contributing_quadruples(fixtures::stab18());
  EXPECT_EQ(c.triangle, 4);
  EXPECT_EQ(c.weight, 0);
  for (int n : c.per_edge) EXPECT_LE(n, 25);
  EXPECT_LE(c.count(), 75);
}

namespace {

std::array<int, 3> stabs_per_edge(const QuadrupleOfTriangles& quad, int triangle) {
  std::array<int, 3> out{};
  for (const auto& a : build_stab_graph(quad).arcs)
    if (a.owner == triangle) ++out[a.label - 1];
  return out;
}

}  // namespace

TEST(ContributingQuadruples, OneStabPerEdgePath) {
  const auto quad = fixtures::weight3_one_stab_per_edge();
  ASSERT_TRUE(pairwise_disjoint(quad));
  const StabGraph g = build_stab_graph(quad);
  for (int t = 1; t <= 4; ++t) EXPECT_EQ(g.weight(t), 3);
  const ContributingQuadruples c = contributing_quadruples(quad);
  EXPECT_EQ(c.weight, 3);
  EXPECT_EQ(stabs_per_edge(quad, c.triangle), (std::array<int, 3>{1, 1, 1}));
  for (int n : c.per_edge) EXPECT_LE(n, 26);
  EXPECT_LE(c.count(), 78);
  for (const EdgeQuad& e : tangent_carrying_quads(quad, CountMode::Exact))
    EXPECT_TRUE(c.quads.count(e));
}

TEST(ContributingQuadruples, FreeEdgePath) {
  const auto quad = fixtures::weight3_free_edge();
  ASSERT_TRUE(pairwise_disjoint(quad));
  const ContributingQuadruples c = contributing_quadruples(quad);
  EXPECT_EQ(c.weight, 3);
  const auto stabs = stabs_per_edge(quad, c.triangle);
  int free_edges = 0;
  for (int k = 0; k < 3; ++k) {
    if (stabs[k] == 0) {
      ++free_edges;
      EXPECT_LE(c.per_edge[k], 25);
    } else if (stabs[k] == 1) {
      EXPECT_LE(c.per_edge[k], 26);
    }
  }
  EXPECT_GE(free_edges, 1);
  EXPECT_LE(c.count(), 78);
  for (const EdgeQuad& e : tangent_carrying_quads(quad, CountMode::Exact))
    EXPECT_TRUE(c.quads.count(e));
}

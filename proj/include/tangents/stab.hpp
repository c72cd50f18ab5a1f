#pragma once

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "tangents/counter.hpp"
#include "tangents/geometry.hpp"

namespace tangents {

/// Plane s·A + t·B of the pencil through a fixed line, canonical as (v:1) or
/// (1:0). Ordered by v with (1:0) = ∞ largest.
struct PencilParam {
  Rational s;
  Rational t;

  static PencilParam canonical(const Rational& s, const Rational& t);
  static PencilParam infinity() { return {Rational(1), Rational(0)}; }
  static PencilParam value(const Rational& v) { return {v, Rational(1)}; }

  bool is_infinity() const { return sgn(t) == 0; }
};

int compare(const PencilParam& a, const PencilParam& b);
inline bool operator==(const PencilParam& a, const PencilParam& b) { return compare(a, b) == 0; }
inline bool operator<(const PencilParam& a, const PencilParam& b) { return compare(a, b) < 0; }

/// A(x) = n1·(x − p) and B(x) = n2·(x − p) for the pencil around e's line.
/// n1 = u × e_k with k the first axis minimizing |u_k|, n2 = n1 × u.
struct PencilBasis {
  Point3 p;
  Vec3<Rational> n1;
  Vec3<Rational> n2;
};

PencilBasis pencil_basis(const Edge& e);

/// Parameter of the pencil plane through x. Throws UndefinedParameter when
/// x is on e's supporting line.
PencilParam pencil_param_of_point(const Edge& e, const Point3& x);

/// Does the pencil plane `param` meet the closed segment f?
bool plane_meets_segment(const Edge& e, const PencilParam& param, const Edge& f);

enum class ArcKind {
  Regular,
  FullCircle,   // f crosses e's line; every plane of the pencil meets f
  SinglePoint,  // f is coplanar with e's line and misses it
};

struct Arc {
  ArcKind kind = ArcKind::Regular;
  PencilParam start;  // walking upward from start reaches end
  PencilParam end;
  bool wraps = false;  // passes through ∞
  std::pair<int, int> edge_label{0, 0};

  bool contains(const PencilParam& x) const;
};

/// Set of pencil parameters whose plane meets f. Throws UndefinedParameter
/// when an endpoint of f lies on e's line.
Arc arc_of_edge(const Edge& e, const Edge& f);

struct StabDiagram {
  Edge base;
  int target = 0;
  std::array<Arc, 3> arcs;
  bool stabbing = false;

  /// Whether every pencil parameter lies in some arc.
  bool covers_all() const;
  /// Parameters where the covering changes, ascending.
  std::vector<PencilParam> breakpoints() const;
};

/// `target` is the triangle index (1..4) recorded in arc labels.
StabDiagram build_diagram(const Edge& e, const Triangle& t, int target = 0);

using Triple = std::array<int, 3>;

/// Edge-label triples, one edge per triangle of `others`, met together by
/// some plane through e.
std::set<Triple> contributing_triples(const Edge& e, const std::array<const Triangle*, 3>& others);
std::set<Triple> contributing_triples(const std::array<StabDiagram, 3>& diagrams);

struct StabGraph {
  struct Entry {
    int owner;   // 1..4
    int label;   // 1..3
    int target;  // 1..4
  };
  std::vector<Entry> arcs;
  std::vector<Entry> in_plane;  // supporting line inside the target's plane

  int weight(int triangle) const;
  int arcs_between(int a, int b) const;
};

StabGraph build_stab_graph(const QuadrupleOfTriangles& q);

bool pairwise_disjoint(const QuadrupleOfTriangles& q);

struct ContributingQuadruples {
  int triangle = 0;  // 1..4, the minimum-weight triangle used
  int weight = 0;
  std::array<int, 3> per_edge{};  // |contributing triples| per edge label
  std::set<EdgeQuad> quads;
  int count() const { return static_cast<int>(quads.size()); }
};

/// Throws GeometryError(Precondition) unless the triangles are pairwise
/// disjoint.
ContributingQuadruples contributing_quadruples(const QuadrupleOfTriangles& q);
int contributing_quadruple_count(const QuadrupleOfTriangles& q);

}  // namespace tangents

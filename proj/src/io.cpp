#include "tangents/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tangents/stab.hpp"

namespace tangents {
namespace {

using json = nlohmann::ordered_json;

std::string path_of(int t, int v, int k) {
  return "triangles[" + std::to_string(t) + "][" + std::to_string(v) + "][" + std::to_string(k) +
         "]";
}

Rational coordinate(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(value.get<std::uint64_t>());
    return Rational(value.get<std::int64_t>());
  }
  if (value.is_number())
    throw InputError(where + ": non-integer JSON number; write it as a decimal string");
  if (!value.is_string()) throw InputError(where + ": expected an integer or a string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    throw InputError(where + ": " + e.what());
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

json quad_json(const QuadExt& x) {
  return {{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"d", to_string(x.d())}};
}

json line_json(const QuadLine& l) {
  json dir = json::array();
  json moment = json::array();
  for (int k = 0; k < 3; ++k) {
    dir.push_back(quad_json(l.dir[k]));
    moment.push_back(quad_json(l.moment[k]));
  }
  return {{"dir", dir}, {"moment", moment}};
}

json edges_json(const EdgeQuad& e) { return json::array({e[0], e[1], e[2], e[3]}); }

json param_json(const PencilParam& p) { return json::array({to_string(p.s), to_string(p.t)}); }

const char* kind_name(ArcKind k) {
  switch (k) {
    case ArcKind::Regular: return "regular";
    case ArcKind::FullCircle: return "full-circle";
    case ArcKind::SinglePoint: return "single-point";
  }
  return "?";
}

json verdict_json(const GeneralPositionVerdict& v) {
  json failures = json::array();
  for (const auto& f : v.failures) {
    json item = {{"edges", edges_json(f.edges)}, {"reason", to_string(f.reason)}};
    if (f.reason == FailureReason::SharedTransversal) item["other"] = edges_json(f.other);
    failures.push_back(item);
  }
  return failures;
}

}  // namespace

QuadrupleOfTriangles parse_quadruple_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("triangles"))
    throw InputError("triangles: missing top-level field");
  const json& tris = doc["triangles"];
  if (!tris.is_array() || tris.size() != 4)
    throw InputError("triangles: expected an array of 4 triangles");

  std::vector<Triangle> out;
  for (int t = 0; t < 4; ++t) {
    const json& tri = tris[t];
    const std::string where = "triangles[" + std::to_string(t) + "]";
    if (!tri.is_array() || tri.size() != 3) throw InputError(where + ": expected 3 vertices");
    std::array<Point3, 3> v;
    for (int i = 0; i < 3; ++i) {
      const json& p = tri[i];
      if (!p.is_array() || p.size() != 3)
        throw InputError(where + "[" + std::to_string(i) + "]: expected 3 coordinates");
      for (int k = 0; k < 3; ++k) v[i][k] = coordinate(p[k], path_of(t, i, k));
    }
    try {
      out.emplace_back(v[0], v[1], v[2]);
    } catch (const GeometryError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return {{out[0], out[1], out[2], out[3]}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write " + path);
}

QuadrupleOfTriangles read_quadruple_file(const std::string& path) {
  return parse_quadruple_json(read_text_file(path));
}

std::string quadruple_to_json(const QuadrupleOfTriangles& q) {
  json tris = json::array();
  for (const Triangle& t : q.t) {
    json tri = json::array();
    for (const Point3& p : t.vertices()) {
      json pt = json::array();
      for (int k = 0; k < 3; ++k) {
        if (p[k].get_den() == 1 && p[k].get_num().fits_slong_p())
          pt.push_back(p[k].get_num().get_si());
        else
          pt.push_back(to_string(p[k]));
      }
      tri.push_back(pt);
    }
    tris.push_back(tri);
  }
  return json{{"triangles", tris}}.dump() + "\n";
}

std::string report_to_json(const TangentReport& r) {
  json tangents = json::array();
  for (const Tangent& t : r.tangents)
    tangents.push_back({{"edges", edges_json(t.edges)}, {"root", t.root}, {"line", line_json(t.line)}});
  json doc = {{"n", r.n},
              {"in_T", r.verdict.in_T},
              {"f_count", r.f_count},
              {"i_count", r.i_count},
              {"tangents", tangents},
              {"failures", verdict_json(r.verdict)}};
  return doc.dump(2) + "\n";
}

std::string verdict_to_json(const GeneralPositionVerdict& v, int f_count, int i_count) {
  json doc = {{"in_T", v.in_T},
              {"f_count", f_count},
              {"i_count", i_count},
              {"failures", verdict_json(v)}};
  return doc.dump(2) + "\n";
}

std::string stab_report_json(const QuadrupleOfTriangles& q) {
  json diagrams = json::array();
  json triples = json::array();
  for (int a = 0; a < 4; ++a) {
    for (int label = 1; label <= 3; ++label) {
      const Edge e = q.t[a].edge(label, a + 1);
      std::array<const Triangle*, 3> others{};
      std::array<StabDiagram, 3> ds;
      json per_target = json::array();
      bool ok = true;
      for (int b = 0, j = 0; b < 4; ++b) {
        if (b == a) continue;
        others[j] = &q.t[b];
        try {
          ds[j] = build_diagram(e, q.t[b], b + 1);
          json arcs = json::array();
          for (const Arc& arc : ds[j].arcs)
            arcs.push_back({{"edge", json::array({arc.edge_label.first, arc.edge_label.second})},
                            {"kind", kind_name(arc.kind)},
                            {"start", param_json(arc.start)},
                            {"end", param_json(arc.end)},
                            {"wraps", arc.wraps}});
          per_target.push_back({{"target", b + 1}, {"stabbing", ds[j].stabbing}, {"arcs", arcs}});
        } catch (const GeometryError& err) {
          ok = false;
          per_target.push_back({{"target", b + 1}, {"error", err.what()}});
        }
        ++j;
      }
      diagrams.push_back({{"edge", json::array({a + 1, label})}, {"diagrams", per_target}});
      json entry = {{"edge", json::array({a + 1, label})}};
      if (ok) {
        json list = json::array();
        for (const Triple& t : contributing_triples(ds)) list.push_back(json::array({t[0], t[1], t[2]}));
        entry["count"] = list.size();
        entry["triples"] = list;
      } else {
        entry["error"] = "degenerate diagram";
      }
      triples.push_back(entry);
    }
  }

  const StabGraph g = build_stab_graph(q);
  json arcs = json::array();
  for (const auto& a : g.arcs)
    arcs.push_back({{"edge", json::array({a.owner, a.label})}, {"target", a.target}});
  json in_plane = json::array();
  for (const auto& a : g.in_plane)
    in_plane.push_back({{"edge", json::array({a.owner, a.label})}, {"target", a.target}});
  json weights = json::array();
  for (int t = 1; t <= 4; ++t) weights.push_back(g.weight(t));

  json doc = {{"diagrams", diagrams},
              {"stab_graph", {{"arcs", arcs}, {"in_plane", in_plane}, {"weights", weights}}},
              {"contributing_triples", triples}};
  const bool disjoint = pairwise_disjoint(q);
  doc["disjoint"] = disjoint;
  if (disjoint) {
    try {
      const ContributingQuadruples c = contributing_quadruples(q);
      doc["contributing_quadruples"] = {{"triangle", c.triangle},
                                        {"weight", c.weight},
                                        {"per_edge", json::array({c.per_edge[0], c.per_edge[1], c.per_edge[2]})},
                                        {"count", c.count()}};
    } catch (const GeometryError& err) {
      doc["contributing_quadruples"] = {{"error", err.what()}};
    }
  }
  return doc.dump(2) + "\n";
}

std::string summary_csv(const Summary& s, const Histogram& h) {
  std::ostringstream out;
  out << "count,frequency\n";
  for (const SummaryRow& row : s.rows) out << row.count << "," << row.frequency << "\n";
  out << "degenerate," << h.degenerate << "\n";
  return out.str();
}

std::string summary_json(const Summary& s, const Histogram& h, const SearchConfig& cfg) {
  json rows = json::array();
  for (const SummaryRow& row : s.rows) {
    json r = {{"count", row.count}, {"frequency", row.frequency}, {"fraction", row.fraction}};
    if (row.reference_fraction) r["reference_fraction"] = *row.reference_fraction;
    rows.push_back(r);
  }
  json top = json::array();
  for (const TopConfig& t : h.top)
    top.push_back({{"index", t.index}, {"n", t.n}, {"quadruple", json::parse(quadruple_to_json(t.quadruple))}});
  json doc = {{"samples", s.samples},
              {"seed", cfg.seed},
              {"coord_bound", cfg.coord_bound},
              {"max_seen", s.max_seen},
              {"degenerate", h.degenerate},
              {"errors", h.errors},
              {"degenerate_rate", s.degenerate_rate},
              {"filter_resolved_fraction", s.filter_resolved},
              {"rows", rows},
              {"top", top}};
  return doc.dump(2) + "\n";
}

}  // namespace tangents

#include "tangents/counter.hpp"

#include <exception>
#include <set>

#include "counter_internal.hpp"

namespace tangents {
namespace detail {
namespace {

Functional make_functional(const std::array<Rational, 6>& coeff) {
  Functional f;
  f.exact = coeff;
  for (int i = 0; i < 6; ++i) f.approx[i] = IntervalF::enclose(coeff[i]);
  return f;
}

}  // namespace

EdgeTable make_edge_table(const QuadrupleOfTriangles& q) {
  EdgeTable table;
  for (int t = 0; t < 4; ++t) {
    for (int label = 1; label <= 3; ++label) {
      EdgeData& d = table.e[t][label - 1];
      d.edge = q.t[t].edge(label, t + 1);
      const PluckerLine& s = d.edge.support;
      d.row = make_functional({s.moment.x, s.moment.y, s.moment.z, s.dir.x, s.dir.y, s.dir.z});

      const Vec3<Rational> u = d.edge.q - d.edge.p;
      const Point3& p = d.edge.p;
      const Rational z(0);
      const Rational one(1);
      const std::array<std::array<Rational, 6>, 3> m{{{z, -u.z, u.y, z, z, z},
                                                       {u.z, z, -u.x, z, z, z},
                                                       {-u.y, u.x, z, z, z, z}}};
      const std::array<std::array<Rational, 6>, 3> n{{{z, p.z, -p.y, one, z, z},
                                                       {-p.z, z, p.x, z, one, z},
                                                       {p.y, -p.x, z, z, z, one}}};
      for (int k = 0; k < 3; ++k) {
        d.m[k] = make_functional(m[k]);
        d.n[k] = make_functional(n[k]);
        std::array<Rational, 6> diff;
        for (int i = 0; i < 6; ++i) diff[i] = m[k][i] - n[k][i];
        d.m_minus_n[k] = make_functional(diff);
      }
    }
  }
  return table;
}

QuadOutcome solve_exact(const EdgeTable& table, const EdgeQuad& edges, bool keep_lines) {
  QuadOutcome out;
  out.edges = edges;
  const TransversalResult r =
      transversals(table.at(0, edges[0]).edge.support, table.at(1, edges[1]).edge.support,
                   table.at(2, edges[2]).edge.support, table.at(3, edges[3]).edge.support);
  out.kind = r.kind;
  if (r.kind == TransversalKind::Infinite) {
    out.failures.push_back({edges, FailureReason::Infinite, {}});
    return out;
  }
  if (r.kind == TransversalKind::OneDouble)
    out.failures.push_back({edges, FailureReason::DoubleRoot, {}});

  for (std::size_t root = 0; root < r.lines.size(); ++root) {
    const QuadLine& x = r.lines[root];
    for (int t = 0; t < 4; ++t) {
      for (int label = 1; label <= 3; ++label) {
        if (label == edges[t]) continue;
        if (quad_sign(side(x, table.at(t, label).edge.support)) != 0) continue;
        EdgeQuad other = edges;
        other[t] = label;
        out.failures.push_back({edges, FailureReason::SharedTransversal, other});
      }
    }
    if (!r.affine[root]) continue;
    bool hit = true;
    for (int t = 0; t < 4 && hit; ++t) hit = meets_closed_edge(x, table.at(t, edges[t]).edge);
    if (!hit) continue;
    ++out.hits;
    if (keep_lines) out.tangents.push_back({x, edges, static_cast<int>(root)});
  }
  return out;
}

}  // namespace detail

using detail::QuadOutcome;

namespace {

bool has_failures(const std::vector<QuadOutcome>& outcomes) {
  for (const auto& o : outcomes)
    if (!o.failures.empty()) return true;
  return false;
}

template <class Fn>
void for_each_quad(bool parallel, Fn&& fn) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < 81; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(tangents_quad_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

std::vector<QuadOutcome> solve_all_exact(const detail::EdgeTable& table, bool keep_lines,
                                         bool parallel) {
  std::vector<QuadOutcome> outcomes(81);
  const auto& quads = all_edge_quads();
  for_each_quad(parallel,
                [&](int i) { outcomes[i] = detail::solve_exact(table, quads[i], keep_lines); });
  return outcomes;
}

std::vector<QuadOutcome> solve_all_filtered(const detail::EdgeTable& table, bool parallel,
                                            FilterStats& stats) {
  std::vector<QuadOutcome> outcomes(81);
  std::vector<FilterStats> per_quad(81);
  const auto& quads = all_edge_quads();
  for_each_quad(parallel, [&](int i) {
    outcomes[i] = detail::solve_filtered(table, quads[i], per_quad[i]);
  });
  for (const auto& s : per_quad) stats.merge(s);
  return outcomes;
}

GeneralPositionVerdict verdict_of(const std::vector<QuadOutcome>& outcomes) {
  GeneralPositionVerdict v;
  std::set<std::pair<EdgeQuad, EdgeQuad>> shared;
  for (const auto& o : outcomes) {
    for (const auto& f : o.failures) {
      if (f.reason == FailureReason::SharedTransversal) {
        const auto key = f.edges < f.other ? std::pair{f.edges, f.other} : std::pair{f.other, f.edges};
        if (!shared.insert(key).second) continue;
      }
      v.failures.push_back(f);
    }
  }
  v.in_T = v.failures.empty();
  return v;
}

TangentReport assemble(std::vector<QuadOutcome>& outcomes) {
  TangentReport report;
  report.verdict = verdict_of(outcomes);
  for (auto& o : outcomes) {
    if (o.kind == TransversalKind::Infinite) ++report.i_count;
    else ++report.f_count;
    for (auto& t : o.tangents) {
      if (!report.verdict.in_T) {
        bool seen = false;
        for (const auto& kept : report.tangents)
          if (same_line(kept.line, t.line)) {
            seen = true;
            break;
          }
        if (seen) continue;
      }
      report.tangents.push_back(std::move(t));
    }
  }
  report.n = static_cast<int>(report.tangents.size());
  return report;
}

}  // namespace

const std::array<EdgeQuad, 81>& all_edge_quads() {
  static const std::array<EdgeQuad, 81> quads = [] {
    std::array<EdgeQuad, 81> out{};
    int k = 0;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int c = 1; c <= 3; ++c)
          for (int d = 1; d <= 3; ++d) out[k++] = {a, b, c, d};
    return out;
  }();
  return quads;
}

const char* to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::Infinite: return "Infinite";
    case FailureReason::DoubleRoot: return "DoubleRoot";
    case FailureReason::SharedTransversal: return "SharedTransversal";
  }
  return "?";
}

bool meets_closed_edge(const QuadLine& line, const Edge& e) {
  try {
    return line_meets_segment_param(line, e).hit;
  } catch (const GeometryError& err) {
    if (err.kind() == GeometryError::Kind::CoincidentLines) return true;
    throw;
  }
}

TangentReport count_tangents(const QuadrupleOfTriangles& q, CountOptions options) {
  const detail::EdgeTable table = detail::make_edge_table(q);
  if (options.mode == CountMode::Exact) {
    auto outcomes = solve_all_exact(table, true, false);
    return assemble(outcomes);
  }

  FilterStats stats;
  auto outcomes = solve_all_filtered(table, options.parallel, stats);
  if (has_failures(outcomes)) {
    outcomes = solve_all_exact(table, true, options.parallel);
  } else {
    const auto& quads = all_edge_quads();
    for_each_quad(options.parallel, [&](int i) {
      if (outcomes[i].hits == 0) return;
      QuadOutcome exact = detail::solve_exact(table, quads[i], true);
      if (exact.hits != outcomes[i].hits || !exact.failures.empty())
        throw GeometryError(GeometryError::Kind::InternalInconsistency,
                            "filtered and exact tangent tests disagree");
      outcomes[i].tangents = std::move(exact.tangents);
    });
  }
  TangentReport report = assemble(outcomes);
  report.stats = stats;
  return report;
}

GeneralPositionVerdict classify_general_position(const QuadrupleOfTriangles& q,
                                                 CountOptions options) {
  const detail::EdgeTable table = detail::make_edge_table(q);
  FilterStats stats;
  auto outcomes = options.mode == CountMode::Exact
                      ? solve_all_exact(table, false, false)
                      : solve_all_filtered(table, options.parallel, stats);
  return verdict_of(outcomes);
}

std::pair<int, int> partition_FI(const QuadrupleOfTriangles& q) {
  const CountSummary s = count_summary(q, CountMode::Filtered);
  return {s.f_count, s.i_count};
}

std::vector<EdgeQuad> tangent_carrying_quads(const QuadrupleOfTriangles& q, CountMode mode) {
  const detail::EdgeTable table = detail::make_edge_table(q);
  FilterStats stats;
  auto outcomes = mode == CountMode::Exact ? solve_all_exact(table, false, false)
                                           : solve_all_filtered(table, false, stats);
  std::vector<EdgeQuad> out;
  for (const auto& o : outcomes)
    if (o.hits > 0) out.push_back(o.edges);
  return out;
}

CountSummary count_summary(const QuadrupleOfTriangles& q, CountMode mode, FilterStats* stats) {
  const detail::EdgeTable table = detail::make_edge_table(q);
  FilterStats local;
  CountSummary s;
  const auto& quads = all_edge_quads();
  for (const auto& edges : quads) {
    const QuadOutcome o = mode == CountMode::Exact ? detail::solve_exact(table, edges, false)
                                                   : detail::solve_filtered(table, edges, local);
    if (o.kind == TransversalKind::Infinite) ++s.i_count;
    else ++s.f_count;
    if (!o.failures.empty()) s.in_T = false;
    s.n += o.hits;
  }
  if (stats) stats->merge(local);
  if (!s.in_T) s.n = count_tangents(q, {CountMode::Exact, false}).n;
  return s;
}

}  // namespace tangents

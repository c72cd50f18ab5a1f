#include <optional>

#include "counter_internal.hpp"

namespace tangents::detail {
namespace {

enum class Branch { P, C, H };

// Exact replay of the interval elimination, built only when some sign is not
// settled by the enclosures.
struct ExactKernel {
  std::array<Rational, 6> a;
  std::array<Rational, 6> b;
  Rational p, c, h, disc;
};

struct PivotPlan {
  std::array<int, 4> row{};
  std::array<int, 4> col{};
  std::array<int, 2> free{};
};

template <class S>
std::array<std::array<S, 6>, 2> eliminate(std::array<std::array<S, 6>, 4> m,
                                          const PivotPlan& plan) {
  std::array<bool, 4> used{};
  for (int s = 0; s < 4; ++s) {
    const int r = plan.row[s];
    const int c = plan.col[s];
    used[r] = true;
    for (int r2 = 0; r2 < 4; ++r2) {
      if (used[r2]) continue;
      const S f = m[r2][c] / m[r][c];
      for (int c2 = 0; c2 < 6; ++c2)
        if (c2 != c) m[r2][c2] -= f * m[r][c2];
      m[r2][c] = S(0);
    }
  }
  std::array<std::array<S, 6>, 2> k{};
  for (int b = 0; b < 2; ++b) {
    for (auto& v : k[b]) v = S(0);
    k[b][plan.free[b]] = S(1);
    for (int s = 3; s >= 0; --s) {
      const int r = plan.row[s];
      const int c = plan.col[s];
      S sum(0);
      for (int c2 = 0; c2 < 6; ++c2)
        if (c2 != c) sum += m[r][c2] * k[b][c2];
      k[b][c] = -(sum / m[r][c]);
    }
  }
  return k;
}

template <class S>
S dot6(const std::array<S, 6>& f, const std::array<S, 6>& x) {
  S out = f[0] * x[0];
  for (int i = 1; i < 6; ++i) out += f[i] * x[i];
  return out;
}

// Plücker relation and polar form on 6-vectors (dir, moment).
template <class S>
S relation(const std::array<S, 6>& x) {
  return x[0] * x[3] + x[1] * x[4] + x[2] * x[5];
}
template <class S>
S polar(const std::array<S, 6>& x, const std::array<S, 6>& y) {
  return x[0] * y[3] + x[1] * y[4] + x[2] * y[5] + y[0] * x[3] + y[1] * x[4] + y[2] * x[5];
}

class Quad {
 public:
  Quad(const EdgeTable& table, const EdgeQuad& edges, FilterStats& stats)
      : table_(table), edges_(edges), stats_(stats) {}

  QuadOutcome solve() {
    QuadOutcome out;
    out.edges = edges_;
    if (!plan_pivots()) {
      ++stats_.fallbacks;
      return solve_exact(table_, edges_, false);
    }
    ++stats_.resolved;

    const auto k = eliminate(interval_rows(), plan_);
    a_ = k[0];
    b_ = k[1];
    const IntervalF p = relation(a_);
    const IntervalF c = relation(b_);
    const IntervalF h = polar(a_, b_);
    const IntervalF disc = h * h - IntervalF(4.0) * p * c;

    const int sd = filtered_sign(disc, [&] { return sgn(exact().disc); }, &stats_);
    if (sd < 0) {
      out.kind = TransversalKind::NoReal;
      return out;
    }
    if (sd == 0) return solve_exact(table_, edges_, false);

    p_ = p;
    c_ = c;
    h_ = h;
    sqrt_disc_ = sqrt(disc);
    if (filtered_sign(p, [&] { return sgn(exact().p); }, &stats_) != 0)
      branch_ = Branch::P;
    else if (filtered_sign(c, [&] { return sgn(exact().c); }, &stats_) != 0)
      branch_ = Branch::C;
    else
      branch_ = Branch::H;

    out.kind = TransversalKind::TwoReal;
    for (int root = 0; root < 2; ++root) {
      const int sigma = root == 0 ? 1 : -1;
      shared_failures(sigma, out.failures);
      bool hit = true;
      for (int t = 0; t < 4 && hit; ++t) hit = edge_hit(table_.at(t, edges_[t]), sigma);
      if (hit) ++out.hits;
    }
    return out;
  }

 private:
  std::array<std::array<IntervalF, 6>, 4> interval_rows() const {
    std::array<std::array<IntervalF, 6>, 4> m;
    for (int i = 0; i < 4; ++i) m[i] = table_.at(i, edges_[i]).row.approx;
    return m;
  }

  // Full pivoting by largest mignitude; fails when no remaining entry is
  // certainly nonzero.
  bool plan_pivots() {
    auto m = interval_rows();
    std::array<bool, 4> row_used{};
    std::array<bool, 6> col_used{};
    for (int s = 0; s < 4; ++s) {
      int br = -1;
      int bc = -1;
      double best = 0.0;
      for (int r = 0; r < 4; ++r) {
        if (row_used[r]) continue;
        for (int c = 0; c < 6; ++c) {
          if (col_used[c]) continue;
          const double mig = m[r][c].mignitude();
          if (mig > best) {
            best = mig;
            br = r;
            bc = c;
          }
        }
      }
      if (br < 0) return false;
      plan_.row[s] = br;
      plan_.col[s] = bc;
      row_used[br] = true;
      col_used[bc] = true;
      for (int r2 = 0; r2 < 4; ++r2) {
        if (row_used[r2]) continue;
        const IntervalF f = m[r2][bc] / m[br][bc];
        for (int c2 = 0; c2 < 6; ++c2)
          if (!col_used[c2]) m[r2][c2] -= f * m[br][c2];
        m[r2][bc] = IntervalF(0.0);
      }
    }
    int k = 0;
    for (int c = 0; c < 6; ++c)
      if (!col_used[c]) plan_.free[k++] = c;
    return true;
  }

  const ExactKernel& exact() {
    if (!exact_) {
      std::array<std::array<Rational, 6>, 4> m;
      for (int i = 0; i < 4; ++i) m[i] = table_.at(i, edges_[i]).row.exact;
      const auto k = eliminate(m, plan_);
      ExactKernel e;
      e.a = k[0];
      e.b = k[1];
      e.p = relation(e.a);
      e.c = relation(e.b);
      e.h = polar(e.a, e.b);
      e.disc = e.h * e.h - 4 * e.p * e.c;
      exact_ = std::move(e);
    }
    return *exact_;
  }

  // Sign of L(X) for root X; L(X) = α + β√disc with α, β linear in L(A), L(B).
  int sign_at(const Functional& f, int sigma) {
    const IntervalF la = dot6(f.approx, a_);
    const IntervalF lb = dot6(f.approx, b_);
    IntervalF alpha;
    IntervalF beta(0.0);
    switch (branch_) {
      case Branch::P:
        alpha = IntervalF(2.0) * p_ * lb - h_ * la;
        beta = sigma > 0 ? la : -la;
        break;
      case Branch::C:
        alpha = IntervalF(2.0) * c_ * la - h_ * lb;
        beta = sigma > 0 ? lb : -lb;
        break;
      case Branch::H:
        alpha = sigma > 0 ? la : lb;
        break;
    }
    return filtered_sign(
        alpha + beta * sqrt_disc_,
        [&] {
          const ExactKernel& e = exact();
          const Rational la = dot6(f.exact, e.a);
          const Rational lb = dot6(f.exact, e.b);
          switch (branch_) {
            case Branch::P:
              return sign_of_sqrt_expr(2 * e.p * lb - e.h * la, sigma * la, e.disc);
            case Branch::C:
              return sign_of_sqrt_expr(2 * e.c * la - e.h * lb, sigma * lb, e.disc);
            case Branch::H:
              break;
          }
          return sgn(sigma > 0 ? la : lb);
        },
        &stats_);
  }

  void shared_failures(int sigma, std::vector<GeneralPositionFailure>& failures) {
    for (int t = 0; t < 4; ++t) {
      for (int label = 1; label <= 3; ++label) {
        if (label == edges_[t]) continue;
        if (sign_at(table_.at(t, label).row, sigma) != 0) continue;
        EdgeQuad other = edges_;
        other[t] = label;
        failures.push_back({edges_, FailureReason::SharedTransversal, other});
      }
    }
  }

  bool edge_hit(const EdgeData& e, int sigma) {
    for (int k = 0; k < 3; ++k) {
      const int sm = sign_at(e.m[k], sigma);
      if (sm == 0) continue;
      const int sn = sign_at(e.n[k], sigma);
      if (sn * sm < 0) return false;
      return sign_at(e.m_minus_n[k], sigma) * sm >= 0;
    }
    // parallel, at infinity, or the edge's own line
    for (int k = 0; k < 3; ++k)
      if (sign_at(e.n[k], sigma) != 0) return false;
    return true;
  }

  const EdgeTable& table_;
  const EdgeQuad& edges_;
  FilterStats& stats_;
  PivotPlan plan_;
  std::array<IntervalF, 6> a_;
  std::array<IntervalF, 6> b_;
  IntervalF p_, c_, h_, sqrt_disc_;
  Branch branch_ = Branch::P;
  std::optional<ExactKernel> exact_;
};

}  // namespace

QuadOutcome solve_filtered(const EdgeTable& table, const EdgeQuad& edges, FilterStats& stats) {
  return Quad(table, edges, stats).solve();
}

}  // namespace tangents::detail

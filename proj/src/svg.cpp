#include "tangents/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <utility>

namespace tangents {
namespace {

using V = Vec3<double>;

double dotd(const V& a, const V& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
V crossd(const V& a, const V& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
V unit(const V& a) {
  const double n = std::sqrt(dotd(a, a));
  return {a.x / n, a.y / n, a.z / n};
}

struct Box {
  V lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
       std::numeric_limits<double>::infinity()};
  V hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
       -std::numeric_limits<double>::infinity()};
};

// Slab clipping of p + s·d against the box.
std::optional<std::pair<V, V>> clip(const V& p, const V& d, const Box& box) {
  double s0 = -std::numeric_limits<double>::infinity();
  double s1 = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    if (d[k] == 0.0) {
      if (p[k] < box.lo[k] || p[k] > box.hi[k]) return std::nullopt;
      continue;
    }
    double a = (box.lo[k] - p[k]) / d[k];
    double b = (box.hi[k] - p[k]) / d[k];
    if (a > b) std::swap(a, b);
    s0 = std::max(s0, a);
    s1 = std::min(s1, b);
  }
  if (s0 > s1) return std::nullopt;
  return std::pair{V{p.x + s0 * d.x, p.y + s0 * d.y, p.z + s0 * d.z},
                   V{p.x + s1 * d.x, p.y + s1 * d.y, p.z + s1 * d.z}};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string render_svg(const QuadrupleOfTriangles& q, const std::vector<QuadLine>& lines,
                       const Vec3<Rational>& view, int width) {
  if (is_zero(view))
    throw GeometryError(GeometryError::Kind::Precondition, "projection direction is zero");
  const V v = unit({view.x.get_d(), view.y.get_d(), view.z.get_d()});
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) < std::abs(v[k])) k = i;
  V axis{};
  axis[k] = 1.0;
  const V right = unit(crossd(axis, v));
  const V up = crossd(v, right);

  Box box;
  for (const Triangle& t : q.t)
    for (const Point3& p : t.vertices()) {
      const V d = to_double(p);
      for (int i = 0; i < 3; ++i) {
        box.lo[i] = std::min(box.lo[i], d[i]);
        box.hi[i] = std::max(box.hi[i], d[i]);
      }
    }
  for (int i = 0; i < 3; ++i) {
    const double pad = 0.1 * std::max(box.hi[i] - box.lo[i], 1e-9);
    box.lo[i] -= pad;
    box.hi[i] += pad;
  }

  double u0 = std::numeric_limits<double>::infinity(), u1 = -u0, w0 = u0, w1 = -u0;
  for (int c = 0; c < 8; ++c) {
    const V corner{(c & 1) ? box.hi.x : box.lo.x, (c & 2) ? box.hi.y : box.lo.y,
                   (c & 4) ? box.hi.z : box.lo.z};
    const double u = dotd(corner, right);
    const double w = dotd(corner, up);
    u0 = std::min(u0, u);
    u1 = std::max(u1, u);
    w0 = std::min(w0, w);
    w1 = std::max(w1, w);
  }
  const double margin = 10.0;
  const double scale = (width - 2 * margin) / std::max(u1 - u0, 1e-12);
  const int height = static_cast<int>(std::ceil((w1 - w0) * scale + 2 * margin));
  auto sx = [&](const V& p) { return fmt(margin + (dotd(p, right) - u0) * scale); };
  auto sy = [&](const V& p) { return fmt(height - margin - (dotd(p, up) - w0) * scale); };

  static const char* colors[4] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int i = 0; i < 4; ++i) {
    out += "<polygon points=\"";
    for (int j = 0; j < 3; ++j) {
      const V p = to_double(q.t[i].vertex(j));
      out += (j ? " " : "") + sx(p) + "," + sy(p);
    }
    out += std::string("\" fill=\"") + colors[i] + "\" fill-opacity=\"0.35\" stroke=\"" +
           colors[i] + "\" stroke-width=\"1.5\"/>\n";
  }
  for (const QuadLine& l : lines) {
    const V d{to_double(l.dir.x), to_double(l.dir.y), to_double(l.dir.z)};
    const V m{to_double(l.moment.x), to_double(l.moment.y), to_double(l.moment.z)};
    const double dd = dotd(d, d);
    if (dd == 0.0) continue;
    const V c = crossd(d, m);
    const V p{c.x / dd, c.y / dd, c.z / dd};
    const auto seg = clip(p, d, box);
    if (!seg) continue;
    out += "<line x1=\"" + sx(seg->first) + "\" y1=\"" + sy(seg->first) + "\" x2=\"" +
           sx(seg->second) + "\" y2=\"" + sy(seg->second) +
           "\" stroke=\"black\" stroke-width=\"0.6\" stroke-opacity=\"0.8\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tangents

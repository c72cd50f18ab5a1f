#include "tangents/verify.hpp"

#include <chrono>

#include "tangents/transversal.hpp"

namespace tangents {
namespace {

Point3 build_point(const CoordText& c) {
  return {parse_decimal(c[0]), parse_decimal(c[1]), parse_decimal(c[2])};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool check_count(const char* name, const QuadrupleText& text, int expected, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const TangentReport r = count_tangents(build_quadruple(text), {CountMode::Exact, false});
  const bool ok = r.n == expected && r.verdict.in_T;
  out << name << ": " << (ok ? "ok" : "FAILED") << " n=" << r.n
      << " in_T=" << (r.verdict.in_T ? "true" : "false") << " (" << seconds_since(t0) << " s)\n";
  if (!ok)
    out << "  expected n=" << expected << " in_T=true\n"
        << "  computed n=" << r.n << " in_T=" << (r.verdict.in_T ? "true" : "false") << "\n";
  return ok;
}

std::string describe(const QuadLine& l) {
  std::string s = "dir(";
  for (int k = 0; k < 3; ++k) s += (k ? ", " : "") + std::to_string(to_double(l.dir[k]));
  s += ") moment(";
  for (int k = 0; k < 3; ++k) s += (k ? ", " : "") + std::to_string(to_double(l.moment[k]));
  return s + ")";
}

bool check_lambda(const ReferenceData& data, std::ostream& out) {
  const TransversalResult r =
      transversals(build_line(data.lines[0]), build_line(data.lines[1]),
                   build_line(data.lines[2]), build_line(data.lines[3]));
  const QuadLine l1 = to_quad(build_line(data.lambdas[0]));
  const QuadLine l2 = to_quad(build_line(data.lambdas[1]));
  bool ok = r.kind == TransversalKind::TwoReal && r.lines.size() == 2;
  if (ok)
    ok = (same_line(r.lines[0], l1) && same_line(r.lines[1], l2)) ||
         (same_line(r.lines[0], l2) && same_line(r.lines[1], l1));
  out << "lambda: " << (ok ? "ok" : "FAILED") << " kind=" << to_string(r.kind) << "\n";
  if (!ok) {
    out << "  expected TwoReal {" << describe(l1) << "; " << describe(l2) << "}\n";
    out << "  computed " << to_string(r.kind) << " {";
    for (std::size_t i = 0; i < r.lines.size(); ++i) out << (i ? "; " : "") << describe(r.lines[i]);
    out << "}\n";
  }
  return ok;
}

}  // namespace

const ReferenceData& builtin_reference_data() {
  static const ReferenceData data = [] {
    auto c = [](const char* x, const char* y, const char* z) { return CoordText{x, y, z}; };
    auto tri = [](CoordText a, CoordText b, CoordText d) { return TriangleText{a, b, d}; };
    auto line = [](CoordText a, CoordText b) { return LineText{a, b}; };
    ReferenceData d;
    d.config62 = {
        tri(c("-10.5", "1", "-10.5"),
            c(".5628568345479573470378601", "1", ".5628568345479573470378601"),
            c(".56285683454726874605620706", ".99999999999822994290647247",
              ".56285683454726874605620706")),
        tri(c("-10.5", "-1", "10.5"), c("1.394218989475", "-1", "-1.394218989475"),
            c("1.3942406911811439954597161", "-1.0000237884694881275439271",
              "-1.3942406911811439954597161")),
        tri(c("-9.5", "-9.5", ".25"), c(".685825", ".685825", ".25"),
            c(".69121730616063647303519136", ".69121730616063647303519136",
              ".26069756890079842876805653")),
        tri(c("9.5", "0", "0"), c("-.511", "0", "0"),
            c("-1.0873912730501133759642956", "0", "-.51645811088049333541289247"))};
    d.config40 = {tri(c("-4", "-731", "-336"), c("297", "-507", "978"), c("824", "-62", "-359")),
                tri(c("531", "-631", "-820"), c("-24", "-716", "713"), c("807", "377", "177")),
                tri(c("586", "-205", "952"), c("861", "-774", "235"), c("-450", "758", "161")),
                tri(c("330", "-141", "-908"), c("942", "-920", "651"), c("-226", "489", "968"))};
    d.lines = {line(c("0", "1", "0"), c("1", "1", "1")), line(c("0", "-1", "0"), c("1", "-1", "-1")),
               line(c("0", "0", ".25"), c("1", "1", ".25")), line(c("0", "0", "0"), c("1", "0", "0"))};
    d.lambdas = {line(c(".5", "0", "0"), c(".5", "2", "1")),
                 line(c("-.5", "0", "0"), c("-.5", "2", "-1"))};
    return d;
  }();
  return data;
}

QuadrupleOfTriangles build_quadruple(const QuadrupleText& text) {
  auto tri = [&](int i) {
    return Triangle(build_point(text[i][0]), build_point(text[i][1]), build_point(text[i][2]));
  };
  return {{tri(0), tri(1), tri(2), tri(3)}};
}

PluckerLine build_line(const LineText& text) {
  return plucker_from_points(build_point(text[0]), build_point(text[1]));
}

int run_verify(VerifyWhich which, const ReferenceData& data, std::ostream& out) {
  bool ok = true;
  const bool all = which == VerifyWhich::all;
  if (all || which == VerifyWhich::t62) ok = check_count("t62", data.config62, data.config62_count, out) && ok;
  if (all || which == VerifyWhich::t40) ok = check_count("t40", data.config40, data.config40_count, out) && ok;
  if (all || which == VerifyWhich::lambda) ok = check_lambda(data, out) && ok;
  return ok ? 0 : 1;
}

}  // namespace tangents

#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include "tangents/io.hpp"
#include "tangents/search.hpp"
#include "tangents/stab.hpp"
#include "tangents/svg.hpp"
#include "tangents/verify.hpp"

namespace tangents::cli {
namespace {

int default_threads() {
  if (const char* env = std::getenv("TANGENTS_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

Vec3<Rational> parse_projection(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw InputError("--projection: expected three comma-separated values");
  Vec3<Rational> v;
  for (int k = 0; k < 3; ++k) {
    try {
      v[k] = parse_rational(parts[k]);
    } catch (const std::exception& e) {
      throw InputError(std::string("--projection: ") + e.what());
    }
  }
  if (is_zero(v)) throw InputError("--projection: direction must be nonzero");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact common tangents of four triangles in 3-space", "tangents"};
  app.require_subcommand(1);

  std::string input;
  bool exact_only = false;
  bool serial = false;
  std::string report_path;
  auto* count = app.add_subcommand("count", "Count common tangents of a quadruple");
  count->add_option("file", input, "Quadruple JSON")->required();
  count->add_flag("--exact-only", exact_only, "Disable the floating-point filter");
  count->add_flag("--serial", serial, "Do not parallelize over edge quadruples");
  count->add_option("--report", report_path, "Write the full tangent report as JSON");

  auto* classify = app.add_subcommand("classify", "General-position verdict and F/I partition");
  classify->add_option("file", input, "Quadruple JSON")->required();
  classify->add_flag("--exact-only", exact_only, "Disable the floating-point filter");

  std::string which = "all";
  auto* verify = app.add_subcommand("verify", "Check the built-in configurations");
  verify->add_option("--which", which, "t62, t40, lambda or all")
      ->check(CLI::IsMember({"t62", "t40", "lambda", "all"}));

  SearchConfig cfg;
  cfg.threads = default_threads();
  std::string format = "csv";
  std::string top_dir;
  bool quiet = false;
  auto* search = app.add_subcommand("search", "Random integer quadruples, tangent-count histogram");
  search->add_option("--samples", cfg.samples, "Number of samples")->required()->check(CLI::PositiveNumber);
  search->add_option("--seed", cfg.seed, "64-bit seed")->required();
  search->add_option("--coord-bound", cfg.coord_bound, "Coordinates drawn from [-B, B]")
      ->check(CLI::PositiveNumber);
  search->add_option("--threads", cfg.threads, "Worker threads (default TANGENTS_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  search->add_option("--out", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  search->add_option("--record-top", cfg.record_top, "Keep this many highest-count quadruples")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--top-dir", top_dir, "Write the kept quadruples here as JSON files");
  search->add_flag("--exact-only", exact_only, "Disable the floating-point filter");
  search->add_flag("--quiet", quiet, "No progress on standard error");

  std::string out_path;
  auto* stab_cmd = app.add_subcommand("stab", "Pencil diagrams, stab graph, contributing triples");
  stab_cmd->add_option("file", input, "Quadruple JSON")->required();
  stab_cmd->add_option("--out", out_path, "Write the report here instead of standard output");

  std::string projection = "1,2,3";
  auto* plot = app.add_subcommand("plot", "SVG of the triangles and their common tangents");
  plot->add_option("file", input, "Quadruple JSON")->required();
  plot->add_option("--out", out_path, "SVG path")->required();
  plot->add_option("--projection", projection, "Viewing direction x,y,z");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*count) {
      const auto q = read_quadruple_file(input);
      const TangentReport r =
          count_tangents(q, {exact_only ? CountMode::Exact : CountMode::Filtered, !serial});
      out << "n=" << r.n << " in_T=" << (r.verdict.in_T ? "true" : "false") << "\n";
      if (!report_path.empty()) write_text_file(report_path, report_to_json(r));
      return kOk;
    }
    if (*classify) {
      const auto q = read_quadruple_file(input);
      const auto mode = exact_only ? CountMode::Exact : CountMode::Filtered;
      const GeneralPositionVerdict v = classify_general_position(q, {mode, true});
      const auto [f, i] = partition_FI(q);
      out << verdict_to_json(v, f, i);
      return kOk;
    }
    if (*verify) {
      const VerifyWhich w = which == "t62"      ? VerifyWhich::t62
                            : which == "t40"    ? VerifyWhich::t40
                            : which == "lambda" ? VerifyWhich::lambda
                                                : VerifyWhich::all;
      return run_verify(w, builtin_reference_data(), out);
    }
    if (*search) {
      if (exact_only) cfg.mode = CountMode::Exact;
      std::function<void(std::uint64_t)> progress;
      const std::uint64_t step = std::max<std::uint64_t>(cfg.samples / 100, 1);
      if (!quiet)
        progress = [&](std::uint64_t done) {
          if (done % step == 0 || done == cfg.samples)
            err << "\rsearch: " << done << "/" << cfg.samples << std::flush;
        };
      const Histogram h = run_search(cfg, progress);
      if (!quiet) err << "\n";
      const Summary s = summarize(h, cfg.coord_bound == 1000);
      out << (format == "json" ? summary_json(s, h, cfg) : summary_csv(s, h));
      if (!top_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(top_dir, ec);
        if (ec) throw IoError("cannot create " + top_dir);
        for (std::size_t r = 0; r < h.top.size(); ++r) {
          const TopConfig& t = h.top[r];
          const std::string name = "top_" + std::to_string(r + 1) + "_n" + std::to_string(t.n) +
                                   "_i" + std::to_string(t.index) + ".json";
          write_text_file((std::filesystem::path(top_dir) / name).string(),
                          quadruple_to_json(t.quadruple));
        }
      }
      return kOk;
    }
    if (*stab_cmd) {
      const auto q = read_quadruple_file(input);
      const std::string report = stab_report_json(q);
      if (out_path.empty()) out << report;
      else write_text_file(out_path, report);
      return kOk;
    }
    if (*plot) {
      const Vec3<Rational> view = parse_projection(projection);
      const auto q = read_quadruple_file(input);
      const TangentReport r = count_tangents(q);
      std::vector<QuadLine> lines;
      for (const Tangent& t : r.tangents) lines.push_back(t.line);
      write_text_file(out_path, render_svg(q, lines, view));
      out << "wrote " << out_path << " (" << lines.size() << " tangents)\n";
      return kOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace tangents::cli

// Wall-clock comparison of the exact serial reference against the filtered
// kernel, serial and OpenMP-parallel.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>

#include "tangents/search.hpp"
#include "tangents/verify.hpp"

using namespace tangents;

namespace {

double time_it(int reps, const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* what, const char* variant, double secs, double base) {
  std::printf("%-14s %-18s %10.3f ms  x%.2f\n", what, variant, secs * 1e3, base / secs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tangents_bench"};
  std::uint64_t samples = 300;
  int reps = 3;
  int threads = omp_get_max_threads();
  app.add_option("--samples", samples, "Random quadruples for the search comparison");
  app.add_option("--reps", reps, "Repetitions for single-configuration timings");
  app.add_option("--threads", threads, "Threads for the OpenMP variants");
  CLI11_PARSE(app, argc, argv);
  omp_set_num_threads(threads);

  const ReferenceData& data = builtin_reference_data();
  const std::pair<const char*, QuadrupleOfTriangles> configs[] = {
      {"config62", build_quadruple(data.config62)}, {"config40", build_quadruple(data.config40)}};
  std::printf("threads=%d\n", threads);
  for (const auto& [name, q] : configs) {
    const double exact = time_it(reps, [&] { count_tangents(q, {CountMode::Exact, false}); });
    const double filtered = time_it(reps, [&] { count_tangents(q, {CountMode::Filtered, false}); });
    const double parallel = time_it(reps, [&] { count_tangents(q, {CountMode::Filtered, true}); });
    row(name, "exact-serial", exact, exact);
    row(name, "filtered-serial", filtered, exact);
    row(name, "filtered-omp", parallel, exact);
  }

  SearchConfig cfg;
  cfg.samples = samples;
  cfg.seed = 2024;
  cfg.threads = 1;
  cfg.mode = CountMode::Exact;
  const double exact = time_it(1, [&] { run_search(cfg); });
  cfg.mode = CountMode::Filtered;
  const double filtered = time_it(1, [&] { run_search(cfg); });
  cfg.threads = threads;
  const double parallel = time_it(1, [&] { run_search(cfg); });
  const double per = static_cast<double>(samples);
  row("search/sample", "exact-serial", exact / per, exact / per);
  row("search/sample", "filtered-serial", filtered / per, exact / per);
  row("search/sample", "filtered-omp", parallel / per, exact / per);
  return 0;
}

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "tangents/counter.hpp"

namespace tangents {

struct SearchConfig {
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  long coord_bound = 1000;
  int threads = 1;
  int record_top = 0;
  CountMode mode = CountMode::Filtered;
};

struct TopConfig {
  std::uint64_t index = 0;
  int n = 0;
  QuadrupleOfTriangles quadruple;
};

struct Histogram {
  std::map<int, std::uint64_t> counts;  // in-T samples by tangent count
  std::uint64_t degenerate = 0;         // samples outside T or failing
  std::uint64_t errors = 0;             // subset of degenerate: exceptions
  int max_seen = 0;
  std::vector<TopConfig> top;  // n descending, then sample index
  FilterStats stats;

  std::uint64_t total() const;
  std::uint64_t frequency(int count) const;
  void merge(Histogram other, int record_top);
};

/// Independent stream for sample `index`; the same (seed, index) always
/// yields the same draws.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index);

  /// Uniform integer in [lo, hi], by rejection so the result does not
  /// depend on the standard library's distribution code.
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Twelve integer points in [−bound, bound]³; a collinear triangle is
/// redrawn from the same stream.
template <class Stream>
QuadrupleOfTriangles sample_quadruple(Stream& stream, long bound) {
  auto triangle = [&] {
    for (;;) {
      std::array<Point3, 3> v;
      for (auto& p : v)
        for (int k = 0; k < 3; ++k) p[k] = Rational(stream.uniform(-bound, bound));
      if (!collinear(v[0], v[1], v[2])) return Triangle(v[0], v[1], v[2]);
    }
  };
  Triangle a = triangle();
  Triangle b = triangle();
  Triangle c = triangle();
  Triangle d = triangle();
  return {{std::move(a), std::move(b), std::move(c), std::move(d)}};
}

QuadrupleOfTriangles sample_quadruple(std::uint64_t seed, std::uint64_t index, long bound);

/// `progress` is called from one thread with the number of finished samples.
Histogram run_search(const SearchConfig& cfg,
                     const std::function<void(std::uint64_t)>& progress = {});

struct SummaryRow {
  int count = 0;
  std::uint64_t frequency = 0;
  double fraction = 0.0;
  std::optional<double> reference_fraction;
};

struct Summary {
  std::uint64_t samples = 0;
  int max_seen = 0;
  double degenerate_rate = 0.0;
  double filter_resolved = 1.0;
  std::vector<SummaryRow> rows;  // ascending count
};

/// `compare_reference` adds the published fractions (meaningful for bound 1000).
Summary summarize(const Histogram& h, bool compare_reference);

/// Published frequencies over 5 000 000 samples.
const std::map<int, std::uint64_t>& reference_histogram_table();
Histogram reference_histogram();

}  // namespace tangents

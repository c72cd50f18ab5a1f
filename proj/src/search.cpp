#include "tangents/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <set>

namespace tangents {
namespace {

void sort_top(std::vector<TopConfig>& top, int record_top) {
  std::sort(top.begin(), top.end(), [](const TopConfig& a, const TopConfig& b) {
    if (a.n != b.n) return a.n > b.n;
    return a.index < b.index;
  });
  if (top.size() > static_cast<std::size_t>(std::max(record_top, 0)))
    top.erase(top.begin() + std::max(record_top, 0), top.end());
}

}  // namespace

std::uint64_t Histogram::total() const {
  std::uint64_t sum = degenerate;
  for (const auto& [count, freq] : counts) sum += freq;
  return sum;
}

std::uint64_t Histogram::frequency(int count) const {
  const auto it = counts.find(count);
  return it == counts.end() ? 0 : it->second;
}

void Histogram::merge(Histogram other, int record_top) {
  for (const auto& [count, freq] : other.counts) counts[count] += freq;
  degenerate += other.degenerate;
  errors += other.errors;
  max_seen = std::max(max_seen, other.max_seen);
  stats.merge(other.stats);
  for (auto& t : other.top) top.push_back(std::move(t));
  sort_top(top, record_top);
}

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

long SampleStream::uniform(long lo, long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + static_cast<long>(x % range);
}

QuadrupleOfTriangles sample_quadruple(std::uint64_t seed, std::uint64_t index, long bound) {
  SampleStream stream(seed, index);
  return sample_quadruple(stream, bound);
}

Histogram run_search(const SearchConfig& cfg,
                     const std::function<void(std::uint64_t)>& progress) {
  Histogram result;
  std::atomic<std::uint64_t> done{0};
  const auto n = static_cast<long long>(cfg.samples);

#pragma omp parallel num_threads(std::max(cfg.threads, 1))
  {
    Histogram local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long long i = 0; i < n; ++i) {
      const auto index = static_cast<std::uint64_t>(i);
      QuadrupleOfTriangles q = sample_quadruple(cfg.seed, index, cfg.coord_bound);
      try {
        const CountSummary s = count_summary(q, cfg.mode, &local.stats);
        if (s.in_T) {
          ++local.counts[s.n];
          local.max_seen = std::max(local.max_seen, s.n);
          if (cfg.record_top > 0) {
            local.top.push_back({index, s.n, std::move(q)});
            if (local.top.size() > 4 * static_cast<std::size_t>(cfg.record_top))
              sort_top(local.top, cfg.record_top);
          }
        } else {
          ++local.degenerate;
        }
      } catch (const std::exception&) {
        ++local.degenerate;
        ++local.errors;
      }
      const auto finished = ++done;
      if (progress && omp_get_thread_num() == 0) progress(finished);
    }
#pragma omp critical(tangents_search_merge)
    result.merge(std::move(local), cfg.record_top);
  }
  sort_top(result.top, cfg.record_top);
  if (progress) progress(done.load());
  return result;
}

const std::map<int, std::uint64_t>& reference_histogram_table() {
  static const std::map<int, std::uint64_t> table{
      {0, 1515706}, {2, 331443}, {4, 646150}, {6, 403679}, {8, 637202}, {10, 327159},
      {12, 358312}, {14, 238913}, {16, 253396}, {18, 114046}, {20, 80199}, {22, 44870},
      {24, 27726},  {26, 12426}, {28, 5796},  {30, 2016},  {32, 813},   {34, 111},
      {36, 30},     {38, 3},     {40, 4}};
  return table;
}

Histogram reference_histogram() {
  Histogram h;
  for (const auto& [count, freq] : reference_histogram_table()) {
    h.counts[count] = freq;
    h.max_seen = std::max(h.max_seen, count);
  }
  return h;
}

Summary summarize(const Histogram& h, bool compare_reference) {
  Summary s;
  s.samples = h.total();
  s.max_seen = h.max_seen;
  s.filter_resolved = h.stats.resolved_fraction();
  const double total = s.samples == 0 ? 1.0 : static_cast<double>(s.samples);
  s.degenerate_rate = static_cast<double>(h.degenerate) / total;

  int top = h.max_seen;
  if (compare_reference) top = std::max(top, reference_histogram_table().rbegin()->first);
  std::set<int> keys;
  for (int count = 0; count <= top; count += 2) keys.insert(count);
  for (const auto& [count, freq] : h.counts) keys.insert(count);
  for (int count : keys) {
    SummaryRow row;
    row.count = count;
    row.frequency = h.frequency(count);
    row.fraction = static_cast<double>(row.frequency) / total;
    if (compare_reference) {
      const auto& ref = reference_histogram_table();
      const auto it = ref.find(count);
      row.reference_fraction = it == ref.end() ? 0.0 : static_cast<double>(it->second) / 5000000.0;
    }
    s.rows.push_back(row);
  }
  return s;
}

}  // namespace tangents

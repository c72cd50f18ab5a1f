#pragma once

#include <cstdint>
#include <utility>

#include "tangents/interval.hpp"

namespace tangents {

/// Counts how often the interval stage settled a decision on its own.
struct FilterStats {
  std::uint64_t resolved = 0;
  std::uint64_t fallbacks = 0;

  void merge(const FilterStats& other) noexcept {
    resolved += other.resolved;
    fallbacks += other.fallbacks;
  }
  double resolved_fraction() const noexcept {
    const auto total = resolved + fallbacks;
    return total == 0 ? 1.0 : static_cast<double>(resolved) / static_cast<double>(total);
  }
};

/// Sign of an expression known through an interval enclosure `approx`.
/// When the enclosure straddles zero, `exact()` is evaluated and its sign
/// returned; the result always equals the exact sign.
template <class ExactSign>
int filtered_sign(const IntervalF& approx, ExactSign&& exact, FilterStats* stats = nullptr) {
  if (const auto s = approx.sign()) {
    if (stats) ++stats->resolved;
    return *s;
  }
  if (stats) ++stats->fallbacks;
  return std::forward<ExactSign>(exact)();
}

}  // namespace tangents

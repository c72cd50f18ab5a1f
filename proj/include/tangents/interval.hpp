#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "tangents/rational.hpp"

namespace tangents {

/// Closed floating-point interval [lo, hi] that encloses an exact value.
///
/// Every operation computes round-to-nearest results and then widens them one
/// ulp outward, so the enclosure survives any rounding mode the caller leaves
/// in effect.
class IntervalF {
 public:
  constexpr IntervalF() = default;
  constexpr IntervalF(double value) : lo_(value), hi_(value) {}  // NOLINT
  IntervalF(double lo, double hi);

  static IntervalF enclose(const Rational& value);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double mid() const noexcept { return 0.5 * (lo_ + hi_); }
  bool contains_zero() const noexcept { return lo_ <= 0.0 && hi_ >= 0.0; }

  /// Sign of the enclosed value, or nullopt when zero lies in [lo, hi].
  std::optional<int> sign() const noexcept {
    if (lo_ > 0.0) return 1;
    if (hi_ < 0.0) return -1;
    return std::nullopt;
  }

  /// Smallest magnitude over the interval.
  double mignitude() const noexcept {
    if (contains_zero()) return 0.0;
    return std::min(std::abs(lo_), std::abs(hi_));
  }

  IntervalF operator-() const noexcept { return raw(-hi_, -lo_); }

  friend IntervalF operator+(const IntervalF& x, const IntervalF& y) noexcept {
    return raw(down(x.lo_ + y.lo_), up(x.hi_ + y.hi_));
  }
  friend IntervalF operator-(const IntervalF& x, const IntervalF& y) noexcept {
    return raw(down(x.lo_ - y.hi_), up(x.hi_ - y.lo_));
  }
  friend IntervalF operator*(const IntervalF& x, const IntervalF& y) noexcept {
    const double a = x.lo_ * y.lo_;
    const double b = x.lo_ * y.hi_;
    const double c = x.hi_ * y.lo_;
    const double d = x.hi_ * y.hi_;
    return raw(down(std::min(std::min(a, b), std::min(c, d))),
               up(std::max(std::max(a, b), std::max(c, d))));
  }
  /// Requires a divisor that excludes zero; otherwise the result is the
  /// whole real line.
  friend IntervalF operator/(const IntervalF& x, const IntervalF& y) noexcept;

  IntervalF& operator+=(const IntervalF& y) noexcept { return *this = *this + y; }
  IntervalF& operator-=(const IntervalF& y) noexcept { return *this = *this - y; }
  IntervalF& operator*=(const IntervalF& y) noexcept { return *this = *this * y; }

  friend IntervalF sqrt(const IntervalF& x) noexcept;

 private:
  static constexpr IntervalF raw(double lo, double hi) noexcept {
    IntervalF out;
    out.lo_ = lo;
    out.hi_ = hi;
    return out;
  }
  static double down(double v) noexcept {
    return std::nextafter(v, -std::numeric_limits<double>::infinity());
  }
  static double up(double v) noexcept {
    return std::nextafter(v, std::numeric_limits<double>::infinity());
  }

  double lo_ = 0.0;
  double hi_ = 0.0;
};

}  // namespace tangents

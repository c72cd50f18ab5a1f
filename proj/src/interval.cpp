#include "tangents/interval.hpp"

#include <stdexcept>

namespace tangents {

IntervalF::IntervalF(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo <= hi)) throw std::invalid_argument("IntervalF requires lo <= hi");
}

IntervalF IntervalF::enclose(const Rational& value) {
  const double approx = value.get_d();
  if (Rational(approx) == value) return IntervalF(approx);
  // get_d truncates toward zero; one ulp on each side is a safe bracket
  return raw(down(approx), up(approx));
}

IntervalF operator/(const IntervalF& x, const IntervalF& y) noexcept {
  if (y.contains_zero()) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return IntervalF::raw(-inf, inf);
  }
  const double a = x.lo_ / y.lo_;
  const double b = x.lo_ / y.hi_;
  const double c = x.hi_ / y.lo_;
  const double d = x.hi_ / y.hi_;
  return IntervalF::raw(IntervalF::down(std::min(std::min(a, b), std::min(c, d))),
                        IntervalF::up(std::max(std::max(a, b), std::max(c, d))));
}

IntervalF sqrt(const IntervalF& x) noexcept {
  const double lo = x.lo_ <= 0.0 ? 0.0 : IntervalF::down(std::sqrt(x.lo_));
  const double hi = x.hi_ <= 0.0 ? 0.0 : IntervalF::up(std::sqrt(x.hi_));
  return IntervalF::raw(std::max(lo, 0.0), hi);
}

}  // namespace tangents

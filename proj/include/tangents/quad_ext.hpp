#pragma once

#include <stdexcept>

#include "tangents/rational.hpp"

namespace tangents {

/// Arithmetic between two irrational values whose radicands differ.
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact real number a + b·√d with rational a, b and d ≥ 0.
///
/// The public constructor normalizes: d is made integral, small square
/// factors are moved into b, and a perfect-square d is folded into a.
/// A rational value always carries b = 0 and d = 0, and combines with any
/// field. Arithmetic between two irrational values requires equal d.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}              // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, Rational d);

  /// √d, normalized.
  static QuadExt sqrt(const Rational& d);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& d() const noexcept { return d_; }

  bool is_rational() const noexcept { return sgn(b_) == 0; }
  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }

  QuadExt conjugate() const { return raw(a_, -b_, d_); }
  QuadExt inverse() const;

  QuadExt operator-() const { return raw(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& other);
  QuadExt& operator-=(const QuadExt& other);
  QuadExt& operator*=(const QuadExt& other);
  QuadExt& operator/=(const QuadExt& other) { return *this *= other.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  /// Exact numeric equality, valid across different radicands.
  friend bool operator==(const QuadExt& x, const QuadExt& y);

 private:
  static QuadExt raw(Rational a, Rational b, Rational d);
  const Rational& common_d(const QuadExt& other) const;

  Rational a_;
  Rational b_;
  Rational d_;
};

/// Exact sign of a + b√d using rational comparisons only.
int quad_sign(const QuadExt& x);

/// Sign of a + b√d for an unnormalized radicand d ≥ 0.
int sign_of_sqrt_expr(const Rational& a, const Rational& b, const Rational& d);

/// Exact sign of x − y; x and y may live in different quadratic fields.
int quad_compare(const QuadExt& x, const QuadExt& y);

/// True iff x and y are the same real number.
bool quad_eq_cross(const QuadExt& x, const QuadExt& y);

double to_double(const QuadExt& x);

}  // namespace tangents

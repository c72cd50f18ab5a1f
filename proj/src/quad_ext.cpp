#include "tangents/quad_ext.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace tangents {
namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<unsigned long> out;
    std::array<bool, 1000> composite{};
    for (unsigned long i = 2; i < composite.size(); ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < composite.size(); j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Splits a positive integer n into k²·r with k collecting the square part of
// the small-prime factorization; r is reported as 1 when it is a perfect
// square itself (k absorbs the root).
void extract_squares(Integer& n, Integer& k) {
  k = 1;
  Integer square;
  for (unsigned long p : small_primes()) {
    if (n < p * p) break;
    const unsigned long pp = p * p;
    while (mpz_divisible_ui_p(n.get_mpz_t(), pp)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), pp);
      k *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(square.get_mpz_t(), n.get_mpz_t());
    k *= square;
    n = 1;
  }
}

}  // namespace

QuadExt QuadExt::raw(Rational a, Rational b, Rational d) {
  QuadExt out;
  out.a_ = std::move(a);
  if (sgn(b) != 0) {
    out.b_ = std::move(b);
    out.d_ = std::move(d);
  }
  return out;
}

QuadExt::QuadExt(Rational a, Rational b, Rational d) : a_(std::move(a)) {
  if (sgn(d) < 0) throw std::domain_error("QuadExt radicand must be non-negative");
  if (sgn(b) == 0 || sgn(d) == 0) return;

  // √(p/q) = √(p·q) / q
  Integer radicand = d.get_num() * d.get_den();
  Rational scale(1, 1);
  scale /= d.get_den();
  Integer root_part;
  extract_squares(radicand, root_part);
  Rational coefficient = b * scale * Rational(root_part);
  if (radicand == 1) {
    a_ += coefficient;
    return;
  }
  b_ = std::move(coefficient);
  d_ = Rational(radicand);
}

QuadExt QuadExt::sqrt(const Rational& d) { return QuadExt(Rational(0), Rational(1), d); }

const Rational& QuadExt::common_d(const QuadExt& other) const {
  if (other.is_rational()) return d_;
  if (is_rational()) return other.d_;
  if (d_ != other.d_) throw FieldMismatch("QuadExt arithmetic across different radicands");
  return d_;
}

QuadExt& QuadExt::operator+=(const QuadExt& other) {
  const Rational d = common_d(other);
  a_ += other.a_;
  b_ += other.b_;
  d_ = sgn(b_) == 0 ? Rational(0) : d;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& other) {
  const Rational d = common_d(other);
  a_ -= other.a_;
  b_ -= other.b_;
  d_ = sgn(b_) == 0 ? Rational(0) : d;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& other) {
  if (other.is_rational()) {
    a_ *= other.a_;
    b_ *= other.a_;
    if (sgn(b_) == 0) d_ = 0;
    return *this;
  }
  if (is_rational()) {
    Rational a = a_;
    a_ = a * other.a_;
    b_ = a * other.b_;
    d_ = sgn(b_) == 0 ? Rational(0) : other.d_;
    return *this;
  }
  const Rational d = common_d(other);
  Rational a = a_ * other.a_ + b_ * other.b_ * d;
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = sgn(b_) == 0 ? Rational(0) : d;
  return *this;
}

QuadExt QuadExt::inverse() const {
  const Rational norm = a_ * a_ - b_ * b_ * d_;
  if (sgn(norm) == 0) throw std::domain_error("QuadExt division by zero");
  return raw(a_ / norm, -b_ / norm, d_);
}

bool operator==(const QuadExt& x, const QuadExt& y) { return quad_compare(x, y) == 0; }

int sign_of_sqrt_expr(const Rational& a, const Rational& b, const Rational& d) {
  const int sa = sgn(a);
  const int sb = sgn(d) == 0 ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: the larger magnitude wins
  const int order = cmp(a * a, b * b * d);
  if (order > 0) return sa;
  if (order < 0) return sb;
  return 0;
}

int quad_sign(const QuadExt& x) { return sign_of_sqrt_expr(x.a(), x.b(), x.d()); }

int quad_compare(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational() || y.is_rational() || x.d() == y.d()) return quad_sign(x - y);
  // x − y = u − v with u = x − y.a in Q(√x.d) and v = y.b·√y.d
  QuadExt u = x;
  u -= QuadExt(y.a());
  const int su = quad_sign(u);
  const int sv = sgn(y.b());
  if (su == 0) return -sv;
  if (su != sv) return su;
  // same sign: sign(u − v) = sign(u) · sign(u² − v²)
  QuadExt diff = u * u;
  diff -= QuadExt(Rational(y.b() * y.b() * y.d()));
  return su * quad_sign(diff);
}

bool quad_eq_cross(const QuadExt& x, const QuadExt& y) { return quad_compare(x, y) == 0; }

double to_double(const QuadExt& x) {
  return x.a().get_d() + x.b().get_d() * std::sqrt(x.d().get_d());
}

}  // namespace tangents

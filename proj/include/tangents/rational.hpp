#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tangents {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed numeric text. `position()` is the byte offset of the first
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exact value of a decimal literal `[+-]? digits* ('.' digits*)?` with at
/// least one digit overall.
Rational parse_decimal(std::string_view text);

/// Accepts an integer, a decimal literal, or `p/q`.
Rational parse_rational(std::string_view text);

/// Lowest-terms serialization, always `p/q` (zero is `0/1`).
std::string to_string(const Rational& value);

/// Shortest decimal rendering, or nullopt when the expansion does not
/// terminate.
std::optional<std::string> to_decimal(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }
inline int sign(const Integer& value) { return sgn(value); }

double to_double(const Rational& value);

}  // namespace tangents

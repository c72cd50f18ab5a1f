#include "tangents/rational.hpp"

#include <cctype>

namespace tangents {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

Rational parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in decimal", i);
    }
  }
  if (digits.empty()) throw ParseError("decimal has no digits", text.size());

  Integer numerator(digits, 10);
  Integer denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction_digits);
  Rational value(numerator, denominator);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  const auto parse_integer = [&](std::string_view part, std::size_t offset) {
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '+' || part[i] == '-')) ++i;
    if (i == part.size()) throw ParseError("fraction part has no digits", offset + i);
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw ParseError(std::string("unexpected character '") + part[i] + "' in fraction",
                         offset + i);
      }
    }
    std::string s(part);
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s, 10);
  };

  Integer p = parse_integer(text.substr(0, slash), 0);
  Integer q = parse_integer(text.substr(slash + 1), slash + 1);
  if (q == 0) throw ParseError("zero denominator", slash + 1);
  Rational value(p, q);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::optional<std::string> to_decimal(const Rational& value) {
  Integer den = value.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(5).get_mpz_t());
  if (den != 1) return std::nullopt;

  const unsigned long places = std::max(twos, fives);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Integer scaled = abs(value.get_num()) * (scale / value.get_den());
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');

  std::string out = value < 0 ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace tangents

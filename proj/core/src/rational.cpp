#include "chartherm/rational.hpp"

#include <cctype>

#include "chartherm/errors.hpp"

namespace chartherm {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Integer value = 0;
  for (char c : s) value = value * 10 + (c - '0');
  return negative ? Integer(-value) : value;
}

}  // namespace

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));

  const std::string_view den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_integer(num_text), den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

}  // namespace chartherm

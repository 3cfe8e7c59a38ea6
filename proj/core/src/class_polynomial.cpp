#include "chartherm/class_polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chartherm/errors.hpp"

namespace chartherm {

namespace {

int parse_positive_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value <= 0) {
    throw ParseError("malformed class monomial: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

char class_letter(ClassConvention convention) {
  return convention == ClassConvention::kPontryagin ? 'p' : 'c';
}

int weighted_degree(const ClassMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::string monomial_name(const ClassMonomial& m, ClassConvention convention) {
  if (m.empty()) return "1";
  std::map<int, int> powers;
  for (int index : m) ++powers[index];
  std::string out;
  for (const auto& [index, power] : powers) {
    if (!out.empty()) out += '*';
    out += class_letter(convention);
    out += std::to_string(index);
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out;
}

ClassMonomial parse_monomial(std::string_view text, ClassConvention convention) {
  if (text == "1") return {};
  ClassMonomial m;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto star = rest.find('*');
    std::string_view factor = rest.substr(0, star);
    rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
    if (star != std::string_view::npos && rest.empty()) {
      throw ParseError("malformed class monomial: '" + std::string(text) + "'");
    }
    if (factor.size() < 2 || factor.front() != class_letter(convention)) {
      throw ParseError("malformed class monomial: '" + std::string(text) + "'");
    }
    factor.remove_prefix(1);
    const auto caret = factor.find('^');
    const int index = parse_positive_int(factor.substr(0, caret), text);
    const int power =
        caret == std::string_view::npos ? 1 : parse_positive_int(factor.substr(caret + 1), text);
    m.insert(m.end(), static_cast<std::size_t>(power), index);
  }
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

ClassPolynomial::ClassPolynomial(ClassConvention convention, int degree)
    : convention_(convention), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("class polynomial degree must be non-negative");
}

void ClassPolynomial::add_term(const ClassMonomial& m, const Rational& c) {
  if (weighted_degree(m) != degree_) {
    throw std::invalid_argument("monomial " + monomial_name(m, convention_) +
                                " does not have degree " + std::to_string(degree_));
  }
  if (c == 0) return;
  ClassMonomial key = m;
  std::sort(key.begin(), key.end(), std::greater<>());
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ClassPolynomial::coefficient(const ClassMonomial& m) const {
  ClassMonomial key = m;
  std::sort(key.begin(), key.end(), std::greater<>());
  const auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ClassPolynomial::evaluate(std::span<const Rational> classes) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int index : m) {
      const auto i = static_cast<std::size_t>(index - 1);
      if (i >= classes.size()) {
        term = 0;
        break;
      }
      term *= classes[i];
    }
    total += term;
  }
  return total;
}

std::string ClassPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Rational magnitude = c < 0 ? Rational(-c) : c;
    if (m.empty()) {
      os << chartherm::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) os << chartherm::to_string(magnitude) << '*';
    os << monomial_name(m, convention_);
  }
  return os.str();
}

ClassPolynomial operator+(const ClassPolynomial& a, const ClassPolynomial& b) {
  if (a.convention() != b.convention() || a.degree() != b.degree()) {
    throw std::invalid_argument("adding class polynomials of different convention or degree");
  }
  ClassPolynomial r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

ClassPolynomial operator*(const ClassPolynomial& a, const ClassPolynomial& b) {
  if (a.convention() != b.convention()) {
    throw std::invalid_argument("multiplying class polynomials of different convention");
  }
  ClassPolynomial r(a.convention(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      ClassMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

}  // namespace chartherm

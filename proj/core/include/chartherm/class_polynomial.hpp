#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chartherm/rational.hpp"

namespace chartherm {

/// Which graded class variables a polynomial is written in. Pontryagin
/// classes are the elementary symmetric functions of the squared formal roots
/// x_i^2; Chern classes are those of the roots x_i themselves.
enum class ClassConvention { kPontryagin, kChern };

char class_letter(ClassConvention convention);

/// Multiset of class indices in non-increasing order: {2, 1, 1} is p2*p1^2.
/// The empty monomial is the unit class 1.
using ClassMonomial = std::vector<int>;

int weighted_degree(const ClassMonomial& m);

/// Canonical text form: "1", "p1", "p1^2*p2", "c1*c2". Indices ascend.
std::string monomial_name(const ClassMonomial& m, ClassConvention convention);

/// Accepts factors in any order ("p2*p1^2") and returns the canonical
/// monomial. Throws ParseError on malformed input or a letter that does not
/// match the convention.
ClassMonomial parse_monomial(std::string_view text, ClassConvention convention);

/// Homogeneous polynomial in graded class variables. Every monomial has
/// weighted degree equal to `degree`; zero coefficients are never stored.
class ClassPolynomial {
 public:
  ClassPolynomial(ClassConvention convention, int degree);

  ClassConvention convention() const { return convention_; }
  int degree() const { return degree_; }
  const std::map<ClassMonomial, Rational>& terms() const { return terms_; }

  /// Adds c to the coefficient of m, erasing it if it cancels to zero.
  /// Throws std::invalid_argument if m has the wrong weighted degree.
  void add_term(const ClassMonomial& m, const Rational& c);
  /// Zero when absent.
  Rational coefficient(const ClassMonomial& m) const;
  bool is_zero() const { return terms_.empty(); }

  /// Substitutes numeric class values: classes[i - 1] is the value of the
  /// i-th class. Missing classes count as zero.
  Rational evaluate(std::span<const Rational> classes) const;

  std::string to_string() const;

  friend bool operator==(const ClassPolynomial&, const ClassPolynomial&) = default;

 private:
  ClassConvention convention_;
  int degree_;
  std::map<ClassMonomial, Rational> terms_;
};

ClassPolynomial operator+(const ClassPolynomial& a, const ClassPolynomial& b);
/// Product; the degree is the sum of the degrees.
ClassPolynomial operator*(const ClassPolynomial& a, const ClassPolynomial& b);

}  // namespace chartherm

#pragma once

#include <span>
#include <string>
#include <vector>

#include "chartherm/rational.hpp"

namespace chartherm {

inline constexpr int kDefaultSeriesOrder = 30;

/// Truncated formal power series c_0 + c_1 x + ... + c_n x^n with exact
/// rational coefficients. The truncation order n is part of the value:
/// binary operations on series of different orders produce a result of the
/// smaller order, and nothing ever extends a series past its order.
class PowerSeries {
 public:
  /// The zero series of the given order.
  explicit PowerSeries(int order = kDefaultSeriesOrder);

  /// Takes ownership of c_0..c_n; order is coeffs.size() - 1.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& c, int order);
  /// The series `x` (zero when order is 0).
  static PowerSeries variable(int order);
  /// c * x^k, truncated away if k > order.
  static PowerSeries monomial(const Rational& c, int k, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Invertible iff the constant term is nonzero.
  bool is_unit() const { return coeffs_.front() != 0; }
  bool is_zero() const;

  /// Drops every term above new_order. new_order must not exceed order().
  PowerSeries truncated(int new_order) const;

  /// Exact division by x^k: requires c_0..c_{k-1} == 0 and shifts the
  /// remaining coefficients down, so the result has order() - k.
  PowerSeries divide_by_x(int k) const;

  /// Horner evaluation of the truncated polynomial in binary64.
  double evaluate(double x) const;

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(const Rational& c);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
/// Cauchy product truncated at min(a.order(), b.order()).
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& c, const PowerSeries& a);
/// Throws DivisionByNonUnit when b has a zero constant term.
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

inline PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) { return a + b; }
inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }
inline PowerSeries series_div(const PowerSeries& a, const PowerSeries& b) { return a / b; }

/// Multiplicative inverse; throws DivisionByNonUnit for non-units.
PowerSeries series_inverse(const PowerSeries& a);

/// exp(a) = sum_k a^k / k!. Throws NonzeroConstantTerm unless a[0] == 0.
PowerSeries series_exp(const PowerSeries& a);

/// Substitution x -> c x: coefficient k is multiplied by c^k.
PowerSeries series_scale_arg(const PowerSeries& a, const Rational& c);

/// exp(c x) to the given order.
PowerSeries exp_series(const Rational& c, int order);

std::string to_string(const PowerSeries& s);

}  // namespace chartherm

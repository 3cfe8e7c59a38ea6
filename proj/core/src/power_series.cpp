#include "chartherm/power_series.hpp"

#include <algorithm>
#include <sstream>

#include "chartherm/errors.hpp"

namespace chartherm {

namespace {

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a power series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::variable(int order) { return monomial(Rational(1), 1, order); }

PowerSeries PowerSeries::monomial(const Rational& c, int k, int order) {
  PowerSeries s(order);
  if (k >= 0 && k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

PowerSeries PowerSeries::truncated(int new_order) const {
  require_order(new_order);
  if (new_order > order()) throw std::invalid_argument("cannot truncate a series to a higher order");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

PowerSeries PowerSeries::divide_by_x(int k) const {
  if (k < 0) throw std::invalid_argument("divide_by_x: negative shift");
  if (k > order()) throw DivisionByNonUnit("divide_by_x: shift exceeds series order");
  for (int i = 0; i < k; ++i) {
    if ((*this)[i] != 0) {
      throw DivisionByNonUnit("divide_by_x: coefficient of x^" + std::to_string(i) + " is nonzero");
    }
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

double PowerSeries::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r = a;
  r += b;
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r = a;
  r -= b;
  return r;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
  PowerSeries r = a;
  r *= c;
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 0; i <= k; ++i) {
      if (a[i] == 0 || b[k - i] == 0) continue;
      acc += a[i] * b[k - i];
    }
    out[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return PowerSeries(std::move(out));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  if (!b.is_unit()) throw DivisionByNonUnit("series division by a series with zero constant term");
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational acc = a[k];
    for (int i = 1; i <= k; ++i) {
      if (b[i] == 0) continue;
      acc -= b[i] * q[static_cast<std::size_t>(k - i)];
    }
    q[static_cast<std::size_t>(k)] = acc / b[0];
  }
  return PowerSeries(std::move(q));
}

PowerSeries series_inverse(const PowerSeries& a) {
  return PowerSeries::constant(Rational(1), a.order()) / a;
}

PowerSeries series_exp(const PowerSeries& a) {
  if (a[0] != 0) throw NonzeroConstantTerm("series_exp requires a zero constant term");
  // E' = a' E  =>  n E_n = sum_{k=1}^{n} k a_k E_{n-k}
  const int n = a.order();
  std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int k = 1; k <= m; ++k) {
      if (a[k] == 0) continue;
      acc += k * a[k] * e[static_cast<std::size_t>(m - k)];
    }
    e[static_cast<std::size_t>(m)] = acc / m;
  }
  return PowerSeries(std::move(e));
}

PowerSeries series_scale_arg(const PowerSeries& a, const Rational& c) {
  std::vector<Rational> out(a.coefficients().begin(), a.coefficients().end());
  Rational power = 1;
  for (std::size_t k = 1; k < out.size(); ++k) {
    power *= c;
    out[k] *= power;
  }
  return PowerSeries(std::move(out));
}

PowerSeries exp_series(const Rational& c, int order) {
  return series_exp(PowerSeries::monomial(c, 1, order));
}

std::string to_string(const PowerSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    const Rational& c = s[k];
    if (c == 0) continue;
    Rational magnitude = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || magnitude != 1) {
      os << to_string(magnitude);
      if (k > 0) os << '*';
    }
    if (k == 1) os << 'x';
    if (k > 1) os << "x^" << k;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace chartherm

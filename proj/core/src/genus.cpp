#include "chartherm/genus.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "chartherm/errors.hpp"

namespace chartherm {

namespace {

using Exponents = std::vector<int>;
/// Polynomial in num_roots commuting variables, keyed by exponent vector.
using RootPolynomial = std::map<Exponents, Rational>;

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

RootPolynomial multiply(const RootPolynomial& a, const RootPolynomial& b, int max_degree) {
  RootPolynomial out;
  for (const auto& [ea, ca] : a) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b) {
      if (da + total_degree(eb) > max_degree) continue;
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.try_emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// e_i(z_1..z_k) as an explicit polynomial.
RootPolynomial elementary(int i, int num_roots) {
  RootPolynomial out;
  std::vector<int> select(static_cast<std::size_t>(num_roots), 0);
  std::fill(select.end() - i, select.end(), 1);
  do {
    out.emplace(select, Rational(1));
  } while (std::next_permutation(select.begin(), select.end()));
  return out;
}

/// Partitions of n in non-increasing order with at most max_parts parts, each
/// at most max_part.
void partitions(int n, int max_part, int max_parts, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  if (max_parts == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions(n - p, p, max_parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n, int max_part, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  partitions(n, max_part, max_parts, prefix, out);
  return out;
}

/// Solves the square system a x = b exactly. The matrix is invertible by
/// construction (unitriangular up to ordering), so a missing pivot is a bug.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular symmetric-function change of basis");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// Coefficients q_0..q_max of Q written in the class variable (x^2 or x).
std::vector<Rational> class_variable_coefficients(const PowerSeries& q, ClassConvention convention,
                                                  int max_degree) {
  const int stride = convention == ClassConvention::kPontryagin ? 2 : 1;
  if (q.order() < stride * max_degree) {
    throw std::invalid_argument("generating series order too low for the requested degree");
  }
  if (convention == ClassConvention::kPontryagin) {
    for (int k = 1; k <= q.order(); k += 2) {
      if (q[k] != 0) throw std::invalid_argument("Pontryagin expansion needs an even generating series");
    }
  }
  std::vector<Rational> out;
  for (int k = 0; k <= max_degree; ++k) out.push_back(q[stride * k]);
  return out;
}

}  // namespace

ClassConvention convention_of(GenusKind kind) {
  return kind == GenusKind::kTodd ? ClassConvention::kChern : ClassConvention::kPontryagin;
}

std::string_view name_of(GenusKind kind) {
  switch (kind) {
    case GenusKind::kL: return "L";
    case GenusKind::kAHat: return "AHAT";
    case GenusKind::kTodd: return "TODD";
    case GenusKind::kCoshHalf: return "COSH_HALF";
  }
  return "?";
}

std::optional<GenusKind> parse_genus_kind(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "L") return GenusKind::kL;
  if (upper == "AHAT" || upper == "A_HAT") return GenusKind::kAHat;
  if (upper == "TODD") return GenusKind::kTodd;
  if (upper == "COSH_HALF" || upper == "COSH") return GenusKind::kCoshHalf;
  return std::nullopt;
}

PowerSeries generating_series(GenusKind kind, int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  const Rational half(1, 2);
  const int wide = order + 1;
  // (e^{x/2} - e^{-x/2}) / x = sinh(x/2) / (x/2), a unit
  const auto sinh_over_half_x = [&] {
    return (exp_series(half, wide) - exp_series(-half, wide)).divide_by_x(1);
  };
  const auto cosh_half = [&] { return half * (exp_series(half, order) + exp_series(-half, order)); };

  switch (kind) {
    case GenusKind::kL:
      return cosh_half() / sinh_over_half_x();
    case GenusKind::kAHat:
      return series_inverse(sinh_over_half_x());
    case GenusKind::kTodd: {
      const PowerSeries one_minus_exp = PowerSeries::constant(1, wide) - exp_series(-1, wide);
      return series_inverse(one_minus_exp.divide_by_x(1));
    }
    case GenusKind::kCoshHalf:
      return cosh_half();
  }
  throw std::invalid_argument("unknown genus kind");
}

PowerSeries verify_LA_identity(int order) {
  return generating_series(GenusKind::kL, order) -
         generating_series(GenusKind::kAHat, order) * generating_series(GenusKind::kCoshHalf, order);
}

std::vector<ClassPolynomial> multiplicative_sequence(const PowerSeries& q, ClassConvention convention,
                                                     int max_degree, int num_roots) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  if (num_roots < max_degree) {
    throw InsufficientRoots("need at least " + std::to_string(max_degree) + " formal roots, got " +
                            std::to_string(num_roots));
  }
  const std::vector<Rational> coeffs = class_variable_coefficients(q, convention, max_degree);
  if (coeffs[0] != 1) throw std::invalid_argument("multiplicative sequence needs Q(0) == 1");

  const auto k = static_cast<std::size_t>(num_roots);

  // prod_i Q(z_i), truncated at total degree max_degree
  RootPolynomial product{{Exponents(k, 0), Rational(1)}};
  for (std::size_t i = 0; i < k; ++i) {
    RootPolynomial factor;
    for (int a = 0; a <= max_degree; ++a) {
      if (coeffs[static_cast<std::size_t>(a)] == 0) continue;
      Exponents e(k, 0);
      e[i] = a;
      factor.emplace(std::move(e), coeffs[static_cast<std::size_t>(a)]);
    }
    product = multiply(product, factor, max_degree);
  }

  std::vector<RootPolynomial> e_basis(static_cast<std::size_t>(max_degree) + 1);
  for (int i = 1; i <= max_degree; ++i) e_basis[static_cast<std::size_t>(i)] = elementary(i, num_roots);

  std::vector<ClassPolynomial> out;
  out.emplace_back(convention, 0);
  out.back().add_term({}, Rational(1));

  for (int j = 1; j <= max_degree; ++j) {
    // rows: monomial symmetric m_lambda; columns: elementary products e_mu
    const auto lambdas = partitions(j, j, num_roots);
    const auto mus = partitions(j, num_roots, j);
    const std::size_t n = lambdas.size();

    const auto leading_exponent = [&](const std::vector<int>& lambda) {
      Exponents e(k, 0);
      std::copy(lambda.begin(), lambda.end(), e.begin());
      return e;
    };

    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(mus.size()));
    for (std::size_t c = 0; c < mus.size(); ++c) {
      RootPolynomial e_mu{{Exponents(k, 0), Rational(1)}};
      for (int part : mus[c]) e_mu = multiply(e_mu, e_basis[static_cast<std::size_t>(part)], j);
      for (std::size_t r = 0; r < n; ++r) {
        const auto it = e_mu.find(leading_exponent(lambdas[r]));
        if (it != e_mu.end()) matrix[r][c] = it->second;
      }
    }
    std::vector<Rational> rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      const auto it = product.find(leading_exponent(lambdas[r]));
      if (it != product.end()) rhs[r] = it->second;
    }

    const std::vector<Rational> solution = solve_exact(std::move(matrix), std::move(rhs));
    ClassPolynomial poly(convention, j);
    for (std::size_t c = 0; c < mus.size(); ++c) poly.add_term(mus[c], solution[c]);
    out.push_back(std::move(poly));
  }
  return out;
}

PowerSeries characteristic_series(GenusKind kind, int order) {
  if (kind == GenusKind::kL) return series_scale_arg(generating_series(kind, order), Rational(2));
  return generating_series(kind, order);
}

std::vector<ClassPolynomial> multiplicative_sequence(GenusKind kind, int max_degree,
                                                     std::optional<int> num_roots) {
  const ClassConvention convention = convention_of(kind);
  const int stride = convention == ClassConvention::kPontryagin ? 2 : 1;
  const PowerSeries q = characteristic_series(kind, stride * std::max(max_degree, 0));
  return multiplicative_sequence(q, convention, max_degree, num_roots.value_or(max_degree + 2));
}

Rational pair_with_fundamental_class(const ClassPolynomial& poly, const ManifoldClassData& data) {
  if (poly.degree() != data.l) return 0;
  if (poly.convention() != data.convention) {
    throw std::invalid_argument("class polynomial and manifold data use different class conventions");
  }
  Rational total = 0;
  for (const auto& [m, c] : poly.terms()) {
    if (m.empty()) {
      // degree-0 top class: only a point has l = 0, and [pt] pairs 1 to 1
      total += c;
      continue;
    }
    const std::string key = monomial_name(m, poly.convention());
    const auto it = data.characteristic_numbers.find(key);
    if (it == data.characteristic_numbers.end()) {
      throw MissingCharacteristicNumber("manifold '" + data.name + "' has no value for " + key);
    }
    total += c * it->second;
  }
  return total;
}

Rational evaluate_genus(const std::vector<ClassPolynomial>& polys, const ManifoldClassData& data) {
  const auto it = std::find_if(polys.begin(), polys.end(),
                               [&](const ClassPolynomial& p) { return p.degree() == data.l; });
  if (it == polys.end()) {
    throw std::invalid_argument("no class polynomial of top degree " + std::to_string(data.l));
  }
  return pair_with_fundamental_class(*it, data);
}

Rational signature_index(const ManifoldClassData& data, TwistPower power) {
  if (data.l < 0) throw std::invalid_argument("manifold top degree must be non-negative");
  if (data.convention != ClassConvention::kPontryagin) {
    throw std::invalid_argument("the signature pairing needs Pontryagin characteristic numbers");
  }
  // (x/2)/tanh(x/2), not the Hirzebruch x/tanh x: the 2^l prefactor restores it
  const auto l_polys = multiplicative_sequence(generating_series(GenusKind::kL, 2 * data.l),
                                               ClassConvention::kPontryagin, data.l, data.l + 2);
  const std::map<int, Rational> trivial{{0, Rational(1)}};
  const auto& ch = data.chern_character_numbers.empty() ? trivial : data.chern_character_numbers;

  Rational total = 0;
  for (const auto& [d, value] : ch) {
    if (d < 0 || d > data.l || value == 0) continue;
    if (d == 0) {
      total += value * pair_with_fundamental_class(l_polys[static_cast<std::size_t>(data.l)], data);
    } else if (d == data.l) {
      total += value;  // L_0 = 1
    } else {
      // <ch_d * L_{l-d}, [M]> needs mixed characteristic numbers
      for (const auto& [m, c] : l_polys[static_cast<std::size_t>(data.l - d)].terms()) {
        const std::string key = "ch" + std::to_string(d) + "*" + monomial_name(m, data.convention);
        const auto it = data.characteristic_numbers.find(key);
        if (it == data.characteristic_numbers.end()) {
          throw MissingCharacteristicNumber("manifold '" + data.name + "' has no value for " + key);
        }
        total += c * it->second;
      }
    }
  }

  const int exponent = power == TwistPower::kTopDegree ? data.l : 2 * data.l;
  return Rational(Integer(1) << exponent) * total;
}

std::map<std::string, Rational> pontryagin_from_chern(const std::map<std::string, Rational>& chern_numbers) {
  const auto c1_sq = chern_numbers.find("c1^2");
  const auto c2 = chern_numbers.find("c2");
  if (c1_sq == chern_numbers.end()) throw MissingCharacteristicNumber("missing Chern number c1^2");
  if (c2 == chern_numbers.end()) throw MissingCharacteristicNumber("missing Chern number c2");
  return {{"p1", c1_sq->second - 2 * c2->second}};
}

}  // namespace chartherm

#include "chartherm/asymmetry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chartherm/errors.hpp"
#include "chartherm/thermo.hpp"

namespace chartherm {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw NonPositiveArgument(std::string(what) + " must be positive and finite");
  }
}

void validate(const IndexDensitySpec& spec) {
  require_positive(spec.beta, "beta");
  require_positive(spec.hbar, "hbar");
}

}  // namespace

AsymmetryPoint f_decomposition(double x, double beta) {
  require_positive(x, "x");
  require_positive(beta, "beta");
  // (e^{x/2} - e^{-x/2})^2 = e^x (1 - e^{-x})^2; written this way nothing
  // overflows at large x
  const double one_minus = -std::expm1(-x);
  const double denom = one_minus * one_minus;
  const double f_plus = 0.5 * x * std::exp(-0.5 * x) / denom / beta;
  const double f_minus = -0.5 * x * std::exp(-1.5 * x) / denom / beta;
  const double derivative = beta_u(x) / beta * partition_closed(x);
  return {x, beta, f_plus, f_minus, derivative};
}

double asymmetry_measure(double x, double beta) {
  require_positive(beta, "beta");
  return 0.5 * x * partition_closed(x) / beta;
}

double circle_L(double x) { return beta_u(x); }

std::string_view name_of(ChNormalization norm) {
  return norm == ChNormalization::kPaper ? "paper" : "canonical";
}

std::optional<ChNormalization> parse_normalization(std::string_view text) {
  if (text == "paper") return ChNormalization::kPaper;
  if (text == "canonical") return ChNormalization::kCanonical;
  return std::nullopt;
}

double circle_ch(double x, ChNormalization norm) {
  const double z = partition_closed(x);
  return norm == ChNormalization::kPaper ? 2.0 * z : z;
}

double index_density(double t, const IndexDensitySpec& spec) {
  validate(spec);
  if (!(t > 0.0) || !(t <= spec.beta)) {
    throw OutOfDomain("index density is defined for 0 < t <= beta, got t = " + std::to_string(t));
  }
  const double a = 2.0 * std::numbers::pi * spec.beta * spec.hbar / t;
  const double ch = circle_ch(a, spec.normalization);
  if (ch == 0.0) return 0.0;  // e^{-a/2} underflow; circle_L is only ~a/2
  return circle_L(a) * ch / spec.beta;
}

QuadratureResult index_integral(const IndexDensitySpec& spec, double tol) {
  validate(spec);
  require_positive(tol, "tol");
  const double lower = kIndexSliver * spec.beta;
  QuadratureResult result =
      integrate_adaptive([&](double t) { return index_density(t, spec); }, lower, spec.beta, tol);
  result.error_estimate += index_density(lower, spec) * lower;
  return result;
}

}  // namespace chartherm

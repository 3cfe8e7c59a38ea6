#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "chartherm/asymmetry.hpp"
#include "chartherm/errors.hpp"
#include "chartherm/thermo.hpp"
#include "oracles/oracles.hpp"

namespace chartherm {
namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) xs.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return xs;
}

// the literal forms, evaluated straight from the exponentials
double f_literal(double x, double beta) {
  const double d = std::exp(x / 2) - std::exp(-x / 2);
  return (0.5 * x * std::exp(x / 2)) / (d * d) / beta;
}

TEST(FDecomposition, ValuesAtUnitPoint) {
  const AsymmetryPoint p = f_decomposition(1.0, 1.0);
  EXPECT_NEAR(p.f_plus, f_literal(1.0, 1.0), 1e-15);
  EXPECT_NEAR(p.f_minus, f_literal(-1.0, 1.0), 1e-15);
  EXPECT_NEAR(p.f_plus, 0.758967069071163, 1e-12);
  EXPECT_NEAR(p.f_minus, -0.279208381237427, 1e-12);
  EXPECT_NEAR(p.f_plus - p.f_minus, 1.038175450308590, 1e-12);
  // -dZ/dbeta = U Z
  EXPECT_NEAR(p.derivative, beta_u(1.0) * partition_closed(1.0), 1e-15);
  EXPECT_NEAR(p.f_plus - p.f_minus, p.derivative, 1e-14);
}

TEST(FDecomposition, SignsAndReflection) {
  for (double x : log_grid(1e-3, 50.0, 40)) {
    for (double beta : {0.5, 1.0, 3.0}) {
      const AsymmetryPoint p = f_decomposition(x, beta);
      EXPECT_GT(p.f_plus, 0.0);
      EXPECT_LT(p.f_minus, 0.0);
      EXPECT_NEAR(p.f_plus - p.f_minus, p.derivative, 1e-13 * p.derivative);
      // f(-x) is f with the sign of x flipped
      if (x < 30) EXPECT_NEAR(p.f_minus, f_literal(-x, beta), 1e-12 * std::abs(p.f_minus));
    }
  }
}

TEST(FDecomposition, MatchesFiniteDifferenceOfPartition) {
  // hbar omega fixed, differentiate Z(beta) = 1/(2 sinh(beta hbar omega / 2))
  for (double x : log_grid(1e-2, 20.0, 50)) {
    const double beta = 1.3;
    const double hw = x / beta;
    const auto z_of_beta = [hw](double b) { return partition_closed(b * hw); };
    const double fd = oracle::minus_derivative(z_of_beta, beta);
    const AsymmetryPoint p = f_decomposition(x, beta);
    EXPECT_NEAR(p.f_plus - p.f_minus, fd, 1e-6 * fd) << x;
  }
}

TEST(FDecomposition, Errors) {
  EXPECT_THROW(f_decomposition(0.0, 1.0), NonPositiveArgument);
  EXPECT_THROW(f_decomposition(1.0, -1.0), NonPositiveArgument);
}

TEST(AsymmetryMeasure, SimplifiedForm) {
  const AsymmetryPoint p = f_decomposition(1.0, 1.0);
  EXPECT_NEAR(asymmetry_measure(1.0, 1.0), p.f_plus - std::abs(p.f_minus), 1e-15);
  EXPECT_NEAR(asymmetry_measure(1.0, 1.0), 0.5 * partition_closed(1.0), 1e-16);
  EXPECT_NEAR(asymmetry_measure(1.0, 1.0), 0.4797586878, 1e-10);
  EXPECT_NEAR(asymmetry_measure(1e-7, 2.0), 1.0 / (2 * 2.0), 1e-12);
  for (double x : log_grid(1e-3, 60.0, 40)) {
    const AsymmetryPoint q = f_decomposition(x, 1.0);
    EXPECT_GT(asymmetry_measure(x, 1.0), 0.0);
    EXPECT_NEAR(asymmetry_measure(x, 1.0), q.f_plus + q.f_minus, 1e-12 * asymmetry_measure(x, 1.0));
  }
}

TEST(CircleL, SameFunctionAsBetaU) {
  EXPECT_NEAR(circle_L(1.0), 1.0819767068693265, 1e-15);
  EXPECT_NEAR(circle_L(1e-9), 1.0, 1e-15);
  for (double x : log_grid(1e-3, 50.0, 30)) EXPECT_EQ(circle_L(x), beta_u(x));
}

TEST(CircleCh, Normalizations) {
  EXPECT_NEAR(circle_ch(1.0, ChNormalization::kPaper), 1.0 / std::sinh(0.5), 1e-15);
  EXPECT_NEAR(circle_ch(1.0, ChNormalization::kPaper), 1.919034751334944, 1e-14);
  EXPECT_EQ(circle_ch(1.0, ChNormalization::kCanonical), partition_closed(1.0));
  for (double x : log_grid(1e-3, 50.0, 30)) {
    EXPECT_EQ(circle_ch(x, ChNormalization::kPaper), 2.0 * circle_ch(x, ChNormalization::kCanonical));
  }
  EXPECT_THROW(circle_ch(-1.0, ChNormalization::kPaper), NonPositiveArgument);
}

TEST(CircleProduct, EqualsUZBeta) {
  for (double x : log_grid(1e-2, 20.0, 40)) {
    const double beta = 1.0;
    const double product = circle_L(x) * circle_ch(x, ChNormalization::kCanonical);
    const double uz_beta = internal_energy(beta, OscillatorSpec{x / beta}) * partition_closed(x) * beta;
    EXPECT_NEAR(product, uz_beta, 1e-12 * uz_beta);
  }
}

TEST(IndexDensity, ValuesAndDomain) {
  const IndexDensitySpec spec;
  const double pi = std::numbers::pi;
  EXPECT_NEAR(index_density(1.0, spec), (pi / std::tanh(pi)) / std::sinh(pi), 1e-15);
  EXPECT_NEAR(index_density(1.0, spec), 0.2730469532118634, 1e-15);
  EXPECT_EQ(index_density(1e-6, spec), 0.0);
  EXPECT_THROW(index_density(0.0, spec), OutOfDomain);
  EXPECT_THROW(index_density(1.5, spec), OutOfDomain);
  EXPECT_THROW(index_density(0.5, IndexDensitySpec{0.0, 1.0}), NonPositiveArgument);
}

TEST(IndexDensity, MonotoneAndVanishingAtZero) {
  const IndexDensitySpec spec;
  double prev = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double d = index_density(i / 1000.0, spec);
    EXPECT_GE(d, prev);
    prev = d;
  }
  // t = 10^{-k} beta, k = 2..6: strictly decreasing toward 0
  double last = index_density(1e-2, spec);
  EXPECT_GT(last, 0.0);
  for (int k = 3; k <= 6; ++k) {
    const double d = index_density(std::pow(10.0, -k), spec);
    EXPECT_LE(d, last);
    last = d;
  }
  EXPECT_EQ(last, 0.0);
}

TEST(IndexIntegral, MatchesSimpsonOracle) {
  const IndexDensitySpec spec;
  const auto r = index_integral(spec, 1e-8);
  const double oracle = oracle::simpson([&](double t) { return index_density(t, spec); }, 1e-8, 1.0, 1000000);
  EXPECT_NEAR(r.value, oracle, 1e-8);
  EXPECT_LE(r.error_estimate, 1e-8);
  EXPECT_GT(r.value, 0.0);
  EXPECT_LT(r.value, index_density(1.0, spec));
}

TEST(IndexIntegral, HalvingToleranceStaysWithinEstimate) {
  const IndexDensitySpec spec;
  for (double tol : {1e-4, 1e-6, 1e-8}) {
    const auto a = index_integral(spec, tol);
    const auto b = index_integral(spec, tol / 2);
    EXPECT_LE(std::abs(a.value - b.value), std::max(a.error_estimate, b.error_estimate));
  }
}

TEST(IndexIntegral, GrowsAsHbarShrinks) {
  const double half = index_integral({1.0, 0.5, ChNormalization::kPaper}, 1e-10).value;
  const double one = index_integral({1.0, 1.0, ChNormalization::kPaper}, 1e-10).value;
  const double two = index_integral({1.0, 2.0, ChNormalization::kPaper}, 1e-10).value;
  EXPECT_GT(half, one);
  EXPECT_GT(one, two);
  const double canonical = index_integral({1.0, 1.0, ChNormalization::kCanonical}, 1e-10).value;
  EXPECT_NEAR(2.0 * canonical, one, 1e-9);
}

TEST(Normalization, Parsing) {
  EXPECT_EQ(parse_normalization("paper"), ChNormalization::kPaper);
  EXPECT_EQ(parse_normalization("canonical"), ChNormalization::kCanonical);
  EXPECT_FALSE(parse_normalization("PAPER").has_value());
}

}  // namespace
}  // namespace chartherm

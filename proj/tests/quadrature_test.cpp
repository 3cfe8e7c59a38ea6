#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "chartherm/errors.hpp"
#include "chartherm/quadrature.hpp"

namespace chartherm {
namespace {

TEST(IntegrateAdaptive, ExactForLowDegreePolynomials) {
  // one 15-point Kronrod panel integrates degree <= 22 exactly
  const auto r = integrate_adaptive([](double t) { return std::pow(t, 12) - 3 * t * t; }, -1.0, 2.0, 1e-12);
  EXPECT_NEAR(r.value, (std::pow(2.0, 13) + 1.0) / 13.0 - (8.0 + 1.0), 1e-11);
  EXPECT_EQ(r.evaluations, 15u);
}

TEST(IntegrateAdaptive, SmoothAndPeakedIntegrands) {
  const auto e = integrate_adaptive([](double t) { return std::exp(t); }, 0.0, 1.0, 1e-13);
  EXPECT_NEAR(e.value, std::numbers::e - 1.0, 1e-13);
  EXPECT_LE(e.error_estimate, 1e-13);

  const auto peak = integrate_adaptive([](double t) { return 1e-2 / (t * t + 1e-4); }, -1.0, 1.0, 1e-10);
  EXPECT_NEAR(peak.value, 2.0 * std::atan(100.0), 1e-9);
}

TEST(IntegrateAdaptive, Errors) {
  const auto f = [](double t) { return std::sqrt(std::abs(t)); };
  EXPECT_THROW(integrate_adaptive(f, 0.0, 1.0, 1e-15, 3), QuadratureNonConvergence);
  EXPECT_THROW(integrate_adaptive(f, 0.0, 1.0, 0.0), NonPositiveArgument);
  EXPECT_THROW(integrate_adaptive(f, 1.0, 1.0, 1e-6), std::invalid_argument);
}

TEST(GaussHermiteRule, MomentsOfTheGaussian) {
  for (int n : {1, 2, 5, 20, 200}) {
    const auto rule = gauss_hermite_rule(n);
    double m0 = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      m0 += rule.weights[i];
      m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    }
    EXPECT_NEAR(m0, std::sqrt(std::numbers::pi), 1e-13) << n;
    if (n >= 2) EXPECT_NEAR(m2, std::sqrt(std::numbers::pi) / 2, 1e-13) << n;
  }
}

TEST(GaussHermiteRule, SymmetricAndScaledWeightsConsistent) {
  const auto rule = gauss_hermite_rule(201);
  EXPECT_EQ(rule.nodes[100], 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    EXPECT_EQ(rule.nodes[i], -rule.nodes[rule.nodes.size() - 1 - i]);
    if (std::abs(rule.nodes[i]) < 5.0) {
      EXPECT_NEAR(rule.weights[i] * std::exp(rule.nodes[i] * rule.nodes[i]), rule.scaled_weights[i],
                  1e-12 * rule.scaled_weights[i]);
    }
  }
  // known two-point rule: nodes +-1/sqrt(2), weights sqrt(pi)/2
  const auto two = gauss_hermite_rule(2);
  EXPECT_NEAR(two.nodes[1], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(two.weights[0], std::sqrt(std::numbers::pi) / 2, 1e-15);
}

}  // namespace
}  // namespace chartherm

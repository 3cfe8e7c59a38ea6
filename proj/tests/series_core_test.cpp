#include <random>

#include <gtest/gtest.h>

#include "chartherm/errors.hpp"
#include "chartherm/power_series.hpp"
#include "oracles/oracles.hpp"

namespace chartherm {
namespace {

PowerSeries from(std::initializer_list<Rational> coeffs) { return PowerSeries(std::vector<Rational>(coeffs)); }

PowerSeries random_series(std::mt19937& rng, int order, bool zero_constant = false) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) c.emplace_back(num(rng), den(rng));
  if (zero_constant) c[0] = 0;
  return PowerSeries(std::move(c));
}

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-1/45")), "-1/45");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_EQ(to_string(Rational(-4, 8)), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("0.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(SeriesAdd, CancelsAndKeepsIdentity) {
  EXPECT_TRUE((from({1, 1}) + from({1, -1})) == from({2, 0}));
  std::mt19937 rng(7);
  const PowerSeries s = random_series(rng, 8);
  EXPECT_EQ(PowerSeries(8) + s, s);
}

TEST(SeriesAdd, MixedOrderTruncatesToSmaller) {
  const PowerSeries sum = from({1, 2, 3, 4}) + from({1, 1});
  EXPECT_EQ(sum.order(), 1);
  EXPECT_EQ(sum, from({2, 3}));
}

TEST(SeriesAdd, BernoulliPlusHalfXGivesOneTwelfth) {
  // x/(e^x - 1) from the Bernoulli numbers, plus x/2
  const auto b = oracle::bernoulli_numbers(6);
  std::vector<Rational> c;
  for (int n = 0; n <= 6; ++n) c.push_back(b[n] / oracle::factorial(n));
  const PowerSeries sum = PowerSeries(c) + PowerSeries::monomial(Rational(1, 2), 1, 6);
  EXPECT_EQ(sum[1], 0);
  EXPECT_EQ(sum[2], Rational(1, 12));
}

TEST(SeriesMul, Identities) {
  std::mt19937 rng(11);
  const PowerSeries s = random_series(rng, 10);
  EXPECT_EQ(s * PowerSeries::constant(1, 10), s);
  EXPECT_EQ(from({1, 1, 0}) * from({1, -1, 0}), from({1, 0, -1}));
}

TEST(SeriesMul, MixedOrderTruncatesToSmaller) {
  EXPECT_EQ((from({1, 1, 1}) * from({1, 1})).order(), 1);
}

TEST(SeriesDiv, SelfQuotientIsOne) {
  std::mt19937 rng(3);
  PowerSeries s = random_series(rng, 12);
  if (!s.is_unit()) s += PowerSeries::constant(1, 12);
  EXPECT_EQ(s / s, PowerSeries::constant(1, 12));
}

TEST(SeriesDiv, RejectsNonUnit) {
  EXPECT_THROW(from({1, 2}) / from({0, 1}), DivisionByNonUnit);
}

TEST(SeriesDiv, XOverExpm1NeedsExplicitShift) {
  const int n = 8;
  const PowerSeries expm1 = exp_series(1, n + 1) - PowerSeries::constant(1, n + 1);
  EXPECT_THROW(PowerSeries::variable(n + 1) / expm1, DivisionByNonUnit);
  const PowerSeries q = PowerSeries::variable(n + 1).divide_by_x(1) / expm1.divide_by_x(1);
  EXPECT_EQ(q.order(), n);
  EXPECT_EQ(q[0], 1);
  EXPECT_EQ(q[1], Rational(-1, 2));
  EXPECT_EQ(q[2], Rational(1, 12));
}

TEST(SeriesDiv, CothConstructionMatchesLongDivision) {
  const int n = 8;
  const Rational half(1, 2);
  const PowerSeries ep = exp_series(half, n + 1);
  const PowerSeries em = exp_series(-half, n + 1);
  const PowerSeries num = (half * PowerSeries::variable(n + 1) * (ep + em)).divide_by_x(1);
  const PowerSeries den = (ep - em).divide_by_x(1);
  const PowerSeries l = num / den;
  const auto expected = oracle::l_coefficients(n);
  for (int k = 0; k <= n; ++k) EXPECT_EQ(l[k], expected[k]) << "k=" << k;
  EXPECT_EQ(l[4], Rational(-1, 720));
}

TEST(DivideByX, ChecksLowCoefficients) {
  EXPECT_THROW(from({1, 2, 3}).divide_by_x(1), DivisionByNonUnit);
  EXPECT_THROW(from({0, 0}).divide_by_x(2), DivisionByNonUnit);
  EXPECT_EQ(from({0, 0, 3, 4}).divide_by_x(2), from({3, 4}));
}

TEST(SeriesExp, KnownValues) {
  EXPECT_EQ(series_exp(PowerSeries(5)), PowerSeries::constant(1, 5));
  EXPECT_EQ(exp_series(1, 4)[2], Rational(1, 2));
  EXPECT_EQ(exp_series(1, 6)[5], Rational(1, 120));
  EXPECT_THROW(series_exp(from({1, 1})), NonzeroConstantTerm);
}

TEST(SeriesExp, CoshHalfByDirectSummation) {
  const int n = 10;
  const PowerSeries two_cosh = exp_series(Rational(1, 2), n) + exp_series(Rational(-1, 2), n);
  // direct: 2 sum_k (x/2)^{2k} / (2k)!
  for (int k = 0; k <= n; ++k) {
    const Rational expected = k % 2 == 0 ? 2 / (oracle::factorial(k) * Rational(Integer(1) << k)) : Rational(0);
    EXPECT_EQ(two_cosh[k], expected);
  }
  EXPECT_EQ(two_cosh[2], Rational(1, 4));
}

TEST(SeriesScaleArg, Substitutions) {
  std::mt19937 rng(5);
  const PowerSeries s = random_series(rng, 6);
  EXPECT_EQ(series_scale_arg(s, 1), s);
  EXPECT_EQ(series_scale_arg(s, 0), PowerSeries::constant(s[0], 6));
  // x coth x has x^2 coefficient 1/3; x -> x/2 gives (x/2) coth(x/2), 1/12
  const PowerSeries ep = exp_series(1, 9);
  const PowerSeries em = exp_series(-1, 9);
  const PowerSeries x_coth_x = (PowerSeries::variable(9) * (ep + em)).divide_by_x(1) / (ep - em).divide_by_x(1);
  EXPECT_EQ(x_coth_x[2], Rational(1, 3));
  EXPECT_EQ(series_scale_arg(x_coth_x, Rational(1, 2))[2], Rational(1, 12));
}

TEST(SeriesProperties, RingAxiomsOnRandomSeries) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const PowerSeries a = random_series(rng, 12);
    const PowerSeries b = random_series(rng, 12);
    const PowerSeries c = random_series(rng, 12);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
  }
}

TEST(SeriesProperties, DivisionInvertsMultiplication) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const PowerSeries a = random_series(rng, 12);
    PowerSeries b = random_series(rng, 12);
    if (!b.is_unit()) b += PowerSeries::constant(1, 12);
    EXPECT_EQ((a * b) / b, a);
  }
}

TEST(SeriesProperties, ExpIsAHomomorphism) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const PowerSeries a = random_series(rng, 10, true);
    const PowerSeries b = random_series(rng, 10, true);
    EXPECT_EQ(series_exp(a + b), series_exp(a) * series_exp(b));
  }
}

TEST(SeriesEvaluate, HornerMatchesPolynomial) {
  const PowerSeries s = from({1, Rational(1, 2), Rational(1, 4)});
  EXPECT_DOUBLE_EQ(s.evaluate(2.0), 1.0 + 1.0 + 1.0);
}

TEST(SeriesToString, ReadableForm) {
  EXPECT_EQ(to_string(from({1, 0, Rational(1, 12), 0, Rational(-1, 720)})), "1 + 1/12*x^2 - 1/720*x^4");
  EXPECT_EQ(to_string(PowerSeries(3)), "0");
  EXPECT_EQ(to_string(from({0, -1})), "-x");
}

}  // namespace
}  // namespace chartherm

#include "chartherm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "chartherm/errors.hpp"
#include "chartherm/hermite.hpp"

namespace chartherm {

namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using Gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& nodes = Kronrod::abscissa();
  const auto& kronrod_w = Kronrod::weights();
  const auto& gauss_w = Gauss::weights();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f0 = f(center);
  double kronrod = kronrod_w[0] * f0;
  double gauss = gauss_w[0] * f0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double pair = f(center - half * nodes[i]) + f(center + half * nodes[i]);
    kronrod += kronrod_w[i] * pair;
    // Gauss nodes are the even-indexed Kronrod nodes
    if (i % 2 == 0) gauss += gauss_w[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::size_t max_intervals) {
  if (!(abs_tol > 0.0)) throw NonPositiveArgument("quadrature tolerance must be positive");
  if (!(b > a)) throw std::invalid_argument("quadrature interval must have b > a");

  std::size_t evaluations = 0;
  const std::function<double(double)> counted = [&](double t) {
    ++evaluations;
    return f(t);
  };

  std::priority_queue<Panel> panels;
  panels.push(gauss_kronrod_15(counted, a, b));
  double total_error = panels.top().error;

  while (total_error > abs_tol) {
    if (panels.size() >= max_intervals) {
      throw QuadratureNonConvergence("adaptive quadrature hit " + std::to_string(max_intervals) +
                                     " intervals with error estimate " + std::to_string(total_error));
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod_15(counted, worst.a, mid);
    const Panel right = gauss_kronrod_15(counted, mid, worst.b);
    panels.push(left);
    panels.push(right);

    // resum rather than update incrementally so cancellation cannot drift
    total_error = 0.0;
    auto copy = panels;
    while (!copy.empty()) {
      total_error += copy.top().error;
      copy.pop();
    }
  }

  // sum smallest contributions first for a deterministic, well-rounded total
  std::vector<Panel> ordered;
  while (!panels.empty()) {
    ordered.push_back(panels.top());
    panels.pop();
  }
  std::sort(ordered.begin(), ordered.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  QuadratureResult result;
  for (const Panel& p : ordered) {
    result.value += p.value;
    result.error_estimate += p.error;
  }
  result.evaluations = evaluations;
  return result;
}

GaussHermiteRule gauss_hermite_rule(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Hermite rule needs at least one node");
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(size);
  Eigen::VectorXd sub(std::max<Eigen::Index>(size - 1, 0));
  for (Eigen::Index k = 1; k < size; ++k) sub(k - 1) = std::sqrt(0.5 * static_cast<double>(k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Jacobi eigenvalue solve failed");

  GaussHermiteRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(rule.nodes.size());
  rule.scaled_weights.resize(rule.nodes.size());

  for (int i = 0; i < n; ++i) {
    double q = solver.eigenvalues()(i);
    // psi_n'(q) = sqrt(2n) psi_{n-1}(q) - q psi_n(q)
    for (int step = 0; step < 3; ++step) {
      const auto psi = hermite_psi_all(n, q);
      const double derivative = std::sqrt(2.0 * n) * psi[static_cast<std::size_t>(n - 1)] -
                                q * psi[static_cast<std::size_t>(n)];
      if (derivative == 0.0) break;
      q -= psi[static_cast<std::size_t>(n)] / derivative;
    }
    const auto psi = hermite_psi_all(n - 1, q);
    double christoffel = 0.0;
    for (double v : psi) christoffel += v * v;
    const auto idx = static_cast<std::size_t>(i);
    rule.nodes[idx] = q;
    rule.scaled_weights[idx] = 1.0 / christoffel;
    rule.weights[idx] = std::exp(-q * q) / christoffel;
  }

  // enforce exact symmetry of the rule about 0
  for (int i = 0; i < n / 2; ++i) {
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    const double node = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
    const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
    const double sw = 0.5 * (rule.scaled_weights[hi] + rule.scaled_weights[lo]);
    rule.nodes[lo] = -node;
    rule.nodes[hi] = node;
    rule.weights[lo] = rule.weights[hi] = w;
    rule.scaled_weights[lo] = rule.scaled_weights[hi] = sw;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace chartherm

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace chartherm {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Globally adaptive bisection with the embedded 7-point Gauss / 15-point
/// Kronrod pair on [a, b]. The interval with the largest |K15 - G7| is split
/// until the summed estimate drops to abs_tol. Throws
/// QuadratureNonConvergence if max_intervals is reached first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::size_t max_intervals = 4000);

/// n-point Gauss-Hermite rule for the weight e^{-q^2}.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  /// weights[i] * e^{nodes[i]^2}, for integrands that carry their own
  /// Gaussian factor. Computed directly, so it stays finite where the plain
  /// weight underflows.
  std::vector<double> scaled_weights;
};

/// Nodes from the symmetric tridiagonal Jacobi matrix, polished by Newton
/// steps on the normalized oscillator function psi_n. Weights from the
/// Christoffel sum 1 / sum_{k<n} psi_k(q)^2.
GaussHermiteRule gauss_hermite_rule(int n);

}  // namespace chartherm

#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "chartherm/hermite.hpp"
#include "chartherm/quadrature.hpp"
#include "chartherm/thermo.hpp"

namespace chartherm {

using Complex = std::complex<double>;

/// Homogeneous coordinates z_0..z_N of a point in CP^N: the expansion
/// coefficients of a state truncated to the lowest N+1 levels.
class TruncatedState {
 public:
  /// Throws ZeroState if every coordinate is zero.
  explicit TruncatedState(std::vector<Complex> coords);

  std::span<const Complex> coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  double norm_squared() const;

 private:
  std::vector<Complex> coords_;
};

/// Covariant symbol sum_i E_i |z_i|^2 / |z|^2 of the diagonal Hamiltonian.
/// Throws LengthMismatch when the sizes differ.
double coherent_symbol(const TruncatedState& z, std::span<const double> energies);

/// Truncated trace sum_{n <= N} C_n e^{-beta E_n}. Without N the full trace
/// is returned in closed form, which only the canonical ladder has; an
/// explicit list is a truncation of some unknown family and throws
/// UnboundedNonCanonical.
double chern_trace(const Spectrum& spectrum, double beta, std::optional<int> max_level);

/// rho(q) = sum_{n <= N} e^{-x (n + 1/2)} psi_n(q)^2.
double thermal_density(double q, double x, int max_level);

/// Integral of thermal_density over the real line by Gauss-Hermite
/// quadrature with the Gaussian folded into the weights. Starts at
/// `initial_nodes` and doubles until successive values agree to 1e-11;
/// throws QuadratureNonConvergence past `max_nodes`.
QuadratureResult integrate_density(double x, int max_level, int initial_nodes = 200,
                                   int max_nodes = 1600);

/// An operator truncated to the lowest N+1 levels of a diagonal Hamiltonian
/// with the given (strictly increasing) energies.
class FiniteOperator {
 public:
  FiniteOperator(Eigen::MatrixXcd entries, std::vector<double> energies);

  const Eigen::MatrixXcd& entries() const { return entries_; }
  std::span<const double> energies() const { return energies_; }
  Eigen::Index dimension() const { return entries_.rows(); }
  Complex trace() const { return entries_.trace(); }

 private:
  Eigen::MatrixXcd entries_;
  std::vector<double> energies_;
};

/// e^{tau H} O e^{-tau H}: O_mn -> e^{tau (E_m - E_n)} O_mn. Throws
/// OutOfDomain for tau < 0.
FiniteOperator euclidean_evolve(const FiniteOperator& op, double tau);

/// 2 pi n / beta for n = -n_max..n_max.
std::vector<double> matsubara_freqs(double beta, int n_max);

/// (1/x) prod_{n=1}^{modes} (1 + x^2/(4 pi^2 n^2))^{-1}, the Matsubara
/// product for 1/(2 sinh(x/2)). Truncation overestimates Z by a relative
/// ~x^2/(4 pi^2 modes); `tail_correction` multiplies by
/// exp(-x^2/(4 pi^2 modes)) to remove the leading part of it.
double matsubara_partition(double x, int modes, bool tail_correction = false);

/// sqrt(sum_{i > N} |c_i|^2 / sum_i |c_i|^2): the L2 distance between a
/// state and its projection onto the lowest N+1 levels.
double l2_truncation_residual(const TruncatedState& target, int max_level);

}  // namespace chartherm

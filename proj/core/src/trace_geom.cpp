#include "chartherm/trace_geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chartherm/errors.hpp"

namespace chartherm {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw NonPositiveArgument(std::string(what) + " must be positive and finite");
  }
}

void require_level(int max_level) {
  if (max_level < 0) throw std::invalid_argument("truncation level must be non-negative");
}

// successive Gauss-Hermite results must agree to this before we stop doubling
constexpr double kDensityAgreement = 1e-11;

}  // namespace

double hermite_psi(int n, double q) {
  if (n < 0) throw std::invalid_argument("hermite_psi: negative level");
  return hermite_psi_all(n, q).back();
}

std::vector<double> hermite_psi_all(int max_level, double q) {
  if (max_level < 0) throw std::invalid_argument("hermite_psi_all: negative level");
  std::vector<double> psi(static_cast<std::size_t>(max_level) + 1);
  psi[0] = std::exp(-0.5 * q * q) / std::sqrt(std::sqrt(std::numbers::pi));
  if (max_level >= 1) psi[1] = std::sqrt(2.0) * q * psi[0];
  for (int n = 1; n < max_level; ++n) {
    const double np1 = n + 1.0;
    psi[static_cast<std::size_t>(n + 1)] = q * std::sqrt(2.0 / np1) * psi[static_cast<std::size_t>(n)] -
                                           std::sqrt(n / np1) * psi[static_cast<std::size_t>(n - 1)];
  }
  return psi;
}

TruncatedState::TruncatedState(std::vector<Complex> coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const Complex& c) { return c == Complex{}; })) {
    throw ZeroState("truncated state has no nonzero coordinate");
  }
}

double TruncatedState::norm_squared() const {
  double sum = 0.0;
  for (const Complex& c : coords_) sum += std::norm(c);
  return sum;
}

double coherent_symbol(const TruncatedState& z, std::span<const double> energies) {
  if (energies.size() != z.size()) {
    throw LengthMismatch("state has " + std::to_string(z.size()) + " coordinates but " +
                         std::to_string(energies.size()) + " energies were given");
  }
  double weighted = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) weighted += energies[i] * std::norm(z.coords()[i]);
  return weighted / z.norm_squared();
}

double chern_trace(const Spectrum& spectrum, double beta, std::optional<int> max_level) {
  require_positive(beta, "beta");
  if (!max_level) {
    if (!spectrum.is_canonical_ladder()) {
      throw UnboundedNonCanonical("only the canonical ladder has a closed-form full trace");
    }
    return partition_closed(beta * *spectrum.ladder_spacing());
  }
  require_level(*max_level);
  const auto levels = spectrum.levels(static_cast<std::size_t>(*max_level));
  double sum = 0.0;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    sum += static_cast<double>(it->degeneracy) * std::exp(-beta * it->energy);
  }
  return sum;
}

double thermal_density(double q, double x, int max_level) {
  require_positive(x, "x");
  require_level(max_level);
  const auto psi = hermite_psi_all(max_level, q);
  double rho = 0.0;
  for (int n = max_level; n >= 0; --n) {
    const double v = psi[static_cast<std::size_t>(n)];
    rho += std::exp(-x * (n + 0.5)) * v * v;
  }
  return rho;
}

QuadratureResult integrate_density(double x, int max_level, int initial_nodes, int max_nodes) {
  require_positive(x, "x");
  require_level(max_level);
  if (initial_nodes < 1) throw std::invalid_argument("need at least one quadrature node");

  QuadratureResult result;
  std::optional<double> previous;
  for (int nodes = initial_nodes; nodes <= max_nodes; nodes *= 2) {
    const GaussHermiteRule rule = gauss_hermite_rule(nodes);
    double value = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      value += rule.scaled_weights[i] * thermal_density(rule.nodes[i], x, max_level);
    }
    result.evaluations += rule.nodes.size();
    if (previous) {
      const double change = std::abs(value - *previous);
      if (change <= kDensityAgreement) {
        result.value = value;
        result.error_estimate = change;
        return result;
      }
    }
    previous = value;
  }
  throw QuadratureNonConvergence("Gauss-Hermite density integral did not settle by " +
                                 std::to_string(max_nodes) + " nodes");
}

FiniteOperator::FiniteOperator(Eigen::MatrixXcd entries, std::vector<double> energies)
    : entries_(std::move(entries)), energies_(std::move(energies)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("finite operator must be a non-empty square matrix");
  }
  if (static_cast<Eigen::Index>(energies_.size()) != entries_.rows()) {
    throw LengthMismatch("operator dimension and energy count differ");
  }
  for (std::size_t i = 1; i < energies_.size(); ++i) {
    if (!(energies_[i] > energies_[i - 1])) {
      throw InvalidSpectrum("reference energies must be strictly increasing");
    }
  }
}

FiniteOperator euclidean_evolve(const FiniteOperator& op, double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw OutOfDomain("Euclidean time must be non-negative");
  Eigen::MatrixXcd evolved = op.entries();
  const auto energies = op.energies();
  for (Eigen::Index m = 0; m < evolved.rows(); ++m) {
    for (Eigen::Index n = 0; n < evolved.cols(); ++n) {
      if (m == n) continue;
      evolved(m, n) *= std::exp(tau * (energies[static_cast<std::size_t>(m)] -
                                       energies[static_cast<std::size_t>(n)]));
    }
  }
  return FiniteOperator(std::move(evolved), std::vector<double>(energies.begin(), energies.end()));
}

std::vector<double> matsubara_freqs(double beta, int n_max) {
  require_positive(beta, "beta");
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  const double spacing = 2.0 * std::numbers::pi / beta;
  std::vector<double> freqs;
  freqs.reserve(2 * static_cast<std::size_t>(n_max) + 1);
  for (int n = -n_max; n <= n_max; ++n) freqs.push_back(spacing * n);
  return freqs;
}

double matsubara_partition(double x, int modes, bool tail_correction) {
  require_positive(x, "x");
  if (modes < 0) throw std::invalid_argument("mode count must be non-negative");
  // log of the product, summed smallest-first with compensation so that the
  // 1e5-factor products stay accurate to a few ulp
  const double scale = x * x / (4.0 * std::numbers::pi * std::numbers::pi);
  double log_product = 0.0;
  double compensation = 0.0;
  for (int n = modes; n >= 1; --n) {
    const double term = std::log1p(scale / (static_cast<double>(n) * n)) - compensation;
    const double sum = log_product + term;
    compensation = (sum - log_product) - term;
    log_product = sum;
  }
  if (tail_correction && modes > 0) log_product += scale / modes;
  return std::exp(-log_product) / x;
}

double l2_truncation_residual(const TruncatedState& target, int max_level) {
  require_level(max_level);
  const auto coords = target.coords();
  double tail = 0.0;
  for (std::size_t i = coords.size(); i-- > static_cast<std::size_t>(max_level) + 1;) {
    tail += std::norm(coords[i]);
  }
  return std::sqrt(tail / target.norm_squared());
}

}  // namespace chartherm

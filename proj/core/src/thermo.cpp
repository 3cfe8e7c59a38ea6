#include "chartherm/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chartherm/errors.hpp"

namespace chartherm {

namespace {

// Below this x the closed forms switch to their Laurent/Taylor expansions.
constexpr double kSeriesBranch = 1e-3;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw NonPositiveArgument(std::string(what) + " must be positive and finite, got " +
                              std::to_string(value));
  }
}

void require_level(int max_level) {
  if (max_level < 0) throw std::invalid_argument("truncation level must be non-negative");
}

}  // namespace

ThermoPoint ThermoPoint::at(double beta, const OscillatorSpec& spec) {
  require_positive(beta, "beta");
  require_positive(spec.hbar_omega, "hbar_omega");
  const double x = beta * spec.hbar_omega;
  const double bu = chartherm::beta_u(x);
  return ThermoPoint{beta, x, chartherm::partition_closed(x), bu / beta, bu};
}

Spectrum Spectrum::from_levels(std::vector<Level> levels) {
  if (levels.empty()) throw EmptySpectrum("spectrum has no levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].degeneracy < 1) throw InvalidSpectrum("level degeneracy must be at least 1");
    if (!std::isfinite(levels[i].energy)) throw InvalidSpectrum("level energy must be finite");
    if (i > 0 && !(levels[i].energy > levels[i - 1].energy)) {
      throw InvalidSpectrum("level energies must be strictly increasing");
    }
  }
  Spectrum s;
  s.levels_ = std::move(levels);
  return s;
}

Spectrum Spectrum::canonical_ladder(double hbar_omega) {
  require_positive(hbar_omega, "hbar_omega");
  Spectrum s;
  s.ladder_spacing_ = hbar_omega;
  return s;
}

std::vector<Level> Spectrum::levels(std::size_t max_level) const {
  if (ladder_spacing_) {
    std::vector<Level> out;
    out.reserve(max_level + 1);
    for (std::size_t n = 0; n <= max_level; ++n) {
      out.push_back({(static_cast<double>(n) + 0.5) * *ladder_spacing_, 1});
    }
    return out;
  }
  const std::size_t count = std::min(max_level + 1, levels_.size());
  return {levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(count)};
}

const std::vector<Level>& Spectrum::explicit_levels() const {
  if (ladder_spacing_) throw UnboundedNonCanonical("the canonical ladder has no finite level list");
  return levels_;
}

double partition_closed(double x) {
  require_positive(x, "x");
  if (x < kSeriesBranch) {
    const double x2 = x * x;
    return 1.0 / x + x * (-1.0 / 24.0 + x2 * (7.0 / 5760.0 - x2 * (31.0 / 967680.0)));
  }
  // 1/(2 sinh(x/2)) without overflow at large x
  return std::exp(-0.5 * x) / -std::expm1(-x);
}

double beta_u(double x) {
  require_positive(x, "x");
  if (x < kSeriesBranch) {
    const double x2 = x * x;
    return 1.0 + x2 * (1.0 / 12.0 + x2 * (-1.0 / 720.0 + x2 * (1.0 / 30240.0)));
  }
  const double half = 0.5 * x;
  return half / std::tanh(half);
}

double internal_energy(double beta, const OscillatorSpec& spec) {
  require_positive(beta, "beta");
  require_positive(spec.hbar_omega, "hbar_omega");
  return beta_u(beta * spec.hbar_omega) / beta;
}

double partition_truncated(double x, int max_level) {
  require_positive(x, "x");
  require_level(max_level);
  double sum = 0.0;
  for (int n = max_level; n >= 0; --n) sum += std::exp(-x * (n + 0.5));
  return sum;
}

double tail_bound(double x, int max_level) {
  require_positive(x, "x");
  require_level(max_level);
  return std::exp(-x * (max_level + 1.5)) / -std::expm1(-x);
}

int minimal_truncation(double x, double tol) {
  require_positive(x, "x");
  require_positive(tol, "tol");
  // e^{-x(N + 3/2)} < tol (1 - e^{-x})
  const double estimate = (-std::log(tol * -std::expm1(-x))) / x - 1.5;
  int n = std::max(0, static_cast<int>(std::floor(estimate)) - 1);
  while (n > 0 && tail_bound(x, n - 1) < tol) --n;
  while (!(tail_bound(x, n) < tol)) ++n;
  return n;
}

double partition_degenerate(const Spectrum& spectrum, double beta) {
  require_positive(beta, "beta");
  if (spectrum.is_canonical_ladder()) return partition_closed(beta * *spectrum.ladder_spacing());
  const auto& levels = spectrum.explicit_levels();
  double sum = 0.0;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    sum += static_cast<double>(it->degeneracy) * std::exp(-beta * it->energy);
  }
  return sum;
}

double mean_energy(const Spectrum& spectrum, double beta) {
  require_positive(beta, "beta");
  if (spectrum.is_canonical_ladder()) {
    return internal_energy(beta, OscillatorSpec{*spectrum.ladder_spacing()});
  }
  // weights relative to the ground level so nothing underflows to 0/0
  const auto& levels = spectrum.explicit_levels();
  const double ground = levels.front().energy;
  double z = 0.0;
  double weighted = 0.0;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const double w = static_cast<double>(it->degeneracy) * std::exp(-beta * (it->energy - ground));
    z += w;
    weighted += w * (it->energy - ground);
  }
  return ground + weighted / z;
}

PowerSeries beta_u_series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  const int wide = order + 1;
  // x/(e^x - 1) = 1 / ((e^x - 1)/x)
  const PowerSeries expm1_over_x = (exp_series(1, wide) - PowerSeries::constant(1, wide)).divide_by_x(1);
  return series_inverse(expm1_over_x) + PowerSeries::monomial(Rational(1, 2), 1, order);
}

PowerSeries partition_times_x_series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  const int wide = order + 1;
  const PowerSeries one_minus_exp_over_x =
      (PowerSeries::constant(1, wide) - exp_series(-1, wide)).divide_by_x(1);
  return exp_series(Rational(-1, 2), order) / one_minus_exp_over_x;
}

}  // namespace chartherm

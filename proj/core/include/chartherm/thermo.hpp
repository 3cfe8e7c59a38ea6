#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chartherm/power_series.hpp"

namespace chartherm {

/// Oscillator with level spacing hbar_omega; 1 is the dimensionless mode.
struct OscillatorSpec {
  double hbar_omega = 1.0;
};

/// Thermodynamic state of the oscillator at inverse temperature beta.
struct ThermoPoint {
  double beta;
  double x;       ///< beta * hbar_omega
  double z;       ///< partition function
  double u;       ///< internal energy
  double beta_u;  ///< dimensionless internal energy

  static ThermoPoint at(double beta, const OscillatorSpec& spec = {});
};

struct Level {
  double energy;
  std::uint64_t degeneracy;
};

/// Ordered energy levels with degeneracies. Either an explicit finite list,
/// or the canonical ladder E_n = (n + 1/2) hbar_omega (degeneracy 1),
/// generated on demand.
class Spectrum {
 public:
  /// Validates strictly increasing energies and degeneracies >= 1. Throws
  /// EmptySpectrum on an empty list, InvalidSpectrum otherwise.
  static Spectrum from_levels(std::vector<Level> levels);
  static Spectrum canonical_ladder(double hbar_omega = 1.0);

  bool is_canonical_ladder() const { return ladder_spacing_.has_value(); }
  /// hbar_omega of the canonical ladder; nullopt for explicit lists.
  std::optional<double> ladder_spacing() const { return ladder_spacing_; }

  /// Levels 0..max_level (fewer if an explicit list is shorter).
  std::vector<Level> levels(std::size_t max_level) const;
  /// Every level of an explicit list; throws UnboundedNonCanonical for the
  /// ladder.
  const std::vector<Level>& explicit_levels() const;

 private:
  std::vector<Level> levels_;
  std::optional<double> ladder_spacing_;
};

/// Z(x) = 1 / (2 sinh(x/2)). Throws NonPositiveArgument unless x > 0.
double partition_closed(double x);

/// beta U = (x/2) / tanh(x/2).
double beta_u(double x);

/// U = hbar_omega/2 + hbar_omega / (e^{beta hbar_omega} - 1).
double internal_energy(double beta, const OscillatorSpec& spec = {});

/// Z_N(x) = sum_{n=0}^{N} e^{-x (n + 1/2)}.
double partition_truncated(double x, int max_level);

/// Z - Z_N = e^{-x (N + 3/2)} / (1 - e^{-x}).
double tail_bound(double x, int max_level);

/// Smallest N with tail_bound(x, N) < tol.
int minimal_truncation(double x, double tol);

/// sum_i C_i e^{-beta E_i} over every level of an explicit spectrum; the
/// canonical ladder evaluates in closed form.
double partition_degenerate(const Spectrum& spectrum, double beta);

/// Mean energy sum_i C_i E_i e^{-beta E_i} / Z.
double mean_energy(const Spectrum& spectrum, double beta);

/// Exact series of x/(e^x - 1) + x/2.
PowerSeries beta_u_series(int order = kDefaultSeriesOrder);

/// Exact series of x Z(x) = x e^{-x/2} / (1 - e^{-x}).
PowerSeries partition_times_x_series(int order = kDefaultSeriesOrder);

}  // namespace chartherm

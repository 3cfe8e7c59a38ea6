#pragma once

#include <optional>
#include <string_view>

#include "chartherm/quadrature.hpp"

namespace chartherm {

/// Split of -dZ/dbeta into the contributions of the two orientations of the
/// thermal circle: -dZ/dbeta = f(x) - f(-x), with
///   f(x) = (1/beta) (x/2) e^{x/2} / (e^{x/2} - e^{-x/2})^2.
/// The 1/beta prefactor is kept on f(-x) as well, so the split is exact.
struct AsymmetryPoint {
  double x;
  double beta;
  double f_plus;      ///< f(x) > 0
  double f_minus;     ///< f(-x) < 0
  double derivative;  ///< -dZ/dbeta = U Z, from the thermodynamic route
};

AsymmetryPoint f_decomposition(double x, double beta);

/// f(x) - |f(-x)| = (x/2) Z(x) / beta; never zero for x > 0.
double asymmetry_measure(double x, double beta);

/// L-genus of the thermal circle, (x/2)/tanh(x/2). The same function as
/// beta_u.
double circle_L(double x);

/// Chern character of the oscillator on the circle. kCanonical is the
/// partition function 1/(2 sinh(x/2)); kPaper is 1/sinh(x/2), twice as large.
/// The factor 2 is reported, never reconciled.
enum class ChNormalization { kCanonical, kPaper };

std::string_view name_of(ChNormalization norm);
/// "canonical" or "paper".
std::optional<ChNormalization> parse_normalization(std::string_view text);

double circle_ch(double x, ChNormalization norm);

struct IndexDensitySpec {
  double beta = 1.0;
  double hbar = 1.0;
  ChNormalization normalization = ChNormalization::kPaper;
};

/// (1/beta) circle_L(a) circle_ch(a) with omega = 2 pi / t, i.e.
/// a = 2 pi beta hbar / t. Defined on 0 < t <= beta; throws OutOfDomain
/// elsewhere. Tends to 0 as t -> 0+.
double index_density(double t, const IndexDensitySpec& spec);

/// Integral of index_density over (0, beta]. The sliver (0, eps beta] with
/// eps = 1e-8 is dropped and bounded by density(eps beta) * eps beta, which
/// is added to the error estimate; the rest is integrated adaptively to
/// `tol`. Throws QuadratureNonConvergence.
QuadratureResult index_integral(const IndexDensitySpec& spec, double tol);

/// Lower end of the integrated interval as a fraction of beta.
inline constexpr double kIndexSliver = 1e-8;

}  // namespace chartherm

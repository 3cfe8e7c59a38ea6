#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chartherm/class_polynomial.hpp"
#include "chartherm/power_series.hpp"
#include "chartherm/rational.hpp"

namespace chartherm {

/// Generating functions Q(x) of the multiplicative sequences:
///   kL         (x/2) / tanh(x/2)
///   kAHat      (x/2) / sinh(x/2)
///   kTodd      x / (1 - e^{-x})
///   kCoshHalf  cosh(x/2), the auxiliary factor relating L and A-hat.
/// L, A-hat and cosh(x/2) are even and expand in Pontryagin classes; Todd
/// expands in Chern classes.
enum class GenusKind { kL, kAHat, kTodd, kCoshHalf };

ClassConvention convention_of(GenusKind kind);
std::string_view name_of(GenusKind kind);
/// Accepts "L", "AHAT", "A_HAT", "TODD", "COSH_HALF" (case-insensitive).
std::optional<GenusKind> parse_genus_kind(std::string_view text);

/// Exact series of the generating function in one formal variable x.
PowerSeries generating_series(GenusKind kind, int order = kDefaultSeriesOrder);

/// L - A-hat * cosh(x/2); identically zero when the genus relation holds.
PowerSeries verify_LA_identity(int order = kDefaultSeriesOrder);

/// Expands prod_i Q(x_i) over `num_roots` formal roots and rewrites each
/// homogeneous part in the elementary symmetric basis (of x_i^2 for the
/// Pontryagin convention, of x_i for Chern). Returns K_0..K_max_degree.
///
/// The rewrite solves the exact linear system relating monomial symmetric
/// and elementary symmetric bases by Gaussian elimination over Q.
/// Throws InsufficientRoots when num_roots < max_degree, and
/// std::invalid_argument when Q(0) != 1 or max_degree < 0.
std::vector<ClassPolynomial> multiplicative_sequence(const PowerSeries& q, ClassConvention convention,
                                                     int max_degree, int num_roots);

/// Series actually expanded by multiplicative_sequence(GenusKind, ...).
/// Equal to generating_series except for kL, which uses Hirzebruch's
/// x / tanh(x) = L(2x), so that L_1 = p1/3 and <L, [CP^2]> = 1.
PowerSeries characteristic_series(GenusKind kind, int order = kDefaultSeriesOrder);

/// Expands characteristic_series(kind), num_roots defaulting to max_degree + 2.
std::vector<ClassPolynomial> multiplicative_sequence(GenusKind kind, int max_degree,
                                                     std::optional<int> num_roots = std::nullopt);

/// Characteristic data of a closed oriented manifold M.
///
/// `l` is the degree (in class units) of the top class polynomial that gets
/// paired with [M]. For the Pontryagin convention that is dim(M) / 4.
/// `characteristic_numbers` maps canonical monomial names ("p1^2", "p2") to
/// their pairing with [M]. Mixed numbers <ch_d * m, [M]> needed by
/// signature_index for 0 < d < l are stored under "ch{d}*{monomial}".
/// `chern_character_numbers` maps a degree d to the twisting bundle's
/// Chern character component: the rank for d = 0, <ch_l, [M]> for d = l.
/// For 0 < d < l an entry only marks the component as present; its pairing
/// comes from the mixed characteristic numbers.
struct ManifoldClassData {
  std::string name;
  int l = 0;
  ClassConvention convention = ClassConvention::kPontryagin;
  std::map<std::string, Rational> characteristic_numbers;
  std::map<int, Rational> chern_character_numbers;
};

/// Pairing of one class polynomial with [M]: zero when its degree is not the
/// top degree l. Throws MissingCharacteristicNumber for an unknown monomial.
Rational pair_with_fundamental_class(const ClassPolynomial& poly, const ManifoldClassData& data);

/// Top-degree pairing K_l[M]. Throws std::invalid_argument when polys has no
/// degree-l entry, MissingCharacteristicNumber as above.
Rational evaluate_genus(const std::vector<ClassPolynomial>& polys, const ManifoldClassData& data);

/// How the 2^l prefactor of the twisted signature formula is read.
/// kHalfRealDimension uses half the real dimension, 2l for Pontryagin data
/// (CP^2 gives a factor 4); this is the reading that recovers the signature.
/// kTopDegree uses l as given in ManifoldClassData (CP^2 gives a factor 2).
enum class TwistPower { kTopDegree, kHalfRealDimension };

/// 2^l * <ch(xi) prod_i (x_i/2)/tanh(x_i/2), [M]>, summing ch_d * K_{l-d}
/// over the supplied Chern character degrees, with K the sequence of
/// generating_series(kL). An empty chern_character_numbers map is read as the
/// trivial line bundle, ch = 1. CP^2, trivial bundle: 1 (kHalfRealDimension)
/// or 1/2 (kTopDegree).
Rational signature_index(const ManifoldClassData& data,
                         TwistPower power = TwistPower::kHalfRealDimension);

/// p1 = c1^2 - 2 c2 on characteristic numbers. Expects keys "c1^2" and "c2";
/// returns {"p1": ...}.
std::map<std::string, Rational> pontryagin_from_chern(const std::map<std::string, Rational>& chern_numbers);

}  // namespace chartherm

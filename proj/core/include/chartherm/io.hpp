#pragma once

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "chartherm/class_polynomial.hpp"
#include "chartherm/genus.hpp"
#include "chartherm/power_series.hpp"
#include "chartherm/thermo.hpp"

namespace chartherm {

// JSON forms. Rationals are always strings ("p/q" or "p"), never floats.
//
//   series      {"order": n, "coeffs": ["1", "0", "1/12", ...]}
//   polynomial  {"degree": d, "terms": {"p1^2": "-1/45", "p2": "7/45"}}
//   manifold    {"name": "CP2", "l": 1, "characteristic_numbers": {"p1": 3},
//                "chern_character_numbers": {"0": 1}}
//   spectrum    {"levels": [[0.5, 1], [1.5, 1], ...]}
//
// Malformed input throws ParseError (or the spectrum's own validation
// errors).

nlohmann::json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const ClassPolynomial& p);
ClassPolynomial polynomial_from_json(const nlohmann::json& j, ClassConvention convention);

/// Characteristic numbers may be JSON integers or rational strings. Keys are
/// canonicalized ("p2*p1" -> "p1*p2"). The class convention is inferred from
/// the key letters (Chern if any key starts with 'c' followed by a digit,
/// otherwise Pontryagin) unless an explicit "convention" field is present.
ManifoldClassData manifold_from_json(const nlohmann::json& j);
nlohmann::json manifold_to_json(const ManifoldClassData& m);

Spectrum spectrum_from_json(const nlohmann::json& j);
nlohmann::json spectrum_to_json(const Spectrum& s, std::size_t max_level = 0);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace chartherm

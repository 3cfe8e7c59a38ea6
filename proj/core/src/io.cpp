#include "chartherm/io.hpp"

#include <cctype>
#include <fstream>

#include "chartherm/errors.hpp"

namespace chartherm {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected an integer or a rational string, got " + j.dump());
}

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

bool is_chern_key(const std::string& key) {
  return key.size() >= 2 && key[0] == 'c' && std::isdigit(static_cast<unsigned char>(key[1]));
}

std::string canonical_key(const std::string& key, ClassConvention convention) {
  // mixed numbers "ch{d}*{monomial}" keep their prefix
  if (key.rfind("ch", 0) == 0) {
    const auto star = key.find('*');
    if (star == std::string::npos) return key;
    return key.substr(0, star + 1) + monomial_name(parse_monomial(key.substr(star + 1), convention), convention);
  }
  return monomial_name(parse_monomial(key, convention), convention);
}

}  // namespace

json series_to_json(const PowerSeries& s) {
  json coeffs = json::array();
  for (const Rational& c : s.coefficients()) coeffs.push_back(to_string(c));
  return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

PowerSeries series_from_json(const json& j) {
  const json& order = require_field(j, "order");
  const json& coeffs = require_field(j, "coeffs");
  if (!order.is_number_integer() || !coeffs.is_array()) throw ParseError("malformed series JSON");
  std::vector<Rational> values;
  for (const json& c : coeffs) {
    if (!c.is_string()) throw ParseError("series coefficients must be fraction strings");
    values.push_back(parse_rational(c.get<std::string>()));
  }
  if (values.empty() || static_cast<std::int64_t>(values.size()) != order.get<std::int64_t>() + 1) {
    throw ParseError("series JSON: coeffs must have order + 1 entries");
  }
  return PowerSeries(std::move(values));
}

json polynomial_to_json(const ClassPolynomial& p) {
  json terms = json::object();
  for (const auto& [m, c] : p.terms()) terms[monomial_name(m, p.convention())] = to_string(c);
  return json{{"degree", p.degree()}, {"terms", std::move(terms)}};
}

ClassPolynomial polynomial_from_json(const json& j, ClassConvention convention) {
  const json& degree = require_field(j, "degree");
  const json& terms = require_field(j, "terms");
  if (!degree.is_number_integer() || !terms.is_object()) throw ParseError("malformed polynomial JSON");
  ClassPolynomial p(convention, degree.get<int>());
  for (const auto& [key, value] : terms.items()) {
    const ClassMonomial m = parse_monomial(key, convention);
    if (weighted_degree(m) != p.degree()) throw ParseError("monomial " + key + " has the wrong degree");
    p.add_term(m, rational_from_json(value));
  }
  return p;
}

ManifoldClassData manifold_from_json(const json& j) {
  ManifoldClassData m;
  m.name = j.value("name", std::string("unnamed"));
  const json& l = require_field(j, "l");
  if (!l.is_number_integer() || l.get<int>() < 0) throw ParseError("'l' must be a non-negative integer");
  m.l = l.get<int>();

  const json& numbers = j.contains("characteristic_numbers") ? j.at("characteristic_numbers") : json::object();
  if (!numbers.is_object()) throw ParseError("'characteristic_numbers' must be an object");

  if (j.contains("convention")) {
    if (!j.at("convention").is_string()) throw ParseError("'convention' must be a string");
    const std::string conv = j.at("convention").get<std::string>();
    if (conv == "pontryagin") m.convention = ClassConvention::kPontryagin;
    else if (conv == "chern") m.convention = ClassConvention::kChern;
    else throw ParseError("unknown class convention '" + conv + "'");
  } else {
    for (const auto& [key, value] : numbers.items()) {
      if (is_chern_key(key)) m.convention = ClassConvention::kChern;
    }
  }

  for (const auto& [key, value] : numbers.items()) {
    m.characteristic_numbers[canonical_key(key, m.convention)] = rational_from_json(value);
  }

  if (j.contains("chern_character_numbers")) {
    const json& ch = j.at("chern_character_numbers");
    if (!ch.is_object()) throw ParseError("'chern_character_numbers' must be an object");
    for (const auto& [key, value] : ch.items()) {
      int degree = 0;
      try {
        std::size_t used = 0;
        degree = std::stoi(key, &used);
        if (used != key.size() || degree < 0) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("Chern character degree keys must be non-negative integers, got '" + key + "'");
      }
      m.chern_character_numbers[degree] = rational_from_json(value);
    }
  }
  return m;
}

json manifold_to_json(const ManifoldClassData& m) {
  json numbers = json::object();
  for (const auto& [key, value] : m.characteristic_numbers) numbers[key] = to_string(value);
  json ch = json::object();
  for (const auto& [degree, value] : m.chern_character_numbers) ch[std::to_string(degree)] = to_string(value);
  return json{{"name", m.name},
              {"l", m.l},
              {"convention", m.convention == ClassConvention::kChern ? "chern" : "pontryagin"},
              {"characteristic_numbers", std::move(numbers)},
              {"chern_character_numbers", std::move(ch)}};
}

Spectrum spectrum_from_json(const json& j) {
  const json& levels = require_field(j, "levels");
  if (!levels.is_array()) throw ParseError("'levels' must be an array");
  std::vector<Level> out;
  for (const json& level : levels) {
    if (!level.is_array() || level.size() != 2 || !level[0].is_number() || !level[1].is_number_integer()) {
      throw ParseError("each level must be [energy, degeneracy], got " + level.dump());
    }
    const auto degeneracy = level[1].get<std::int64_t>();
    if (degeneracy < 1) throw InvalidSpectrum("level degeneracy must be at least 1");
    out.push_back({level[0].get<double>(), static_cast<std::uint64_t>(degeneracy)});
  }
  return Spectrum::from_levels(std::move(out));
}

json spectrum_to_json(const Spectrum& s, std::size_t max_level) {
  json levels = json::array();
  const auto list = s.is_canonical_ladder() ? s.levels(max_level) : s.explicit_levels();
  for (const Level& level : list) levels.push_back(json::array({level.energy, level.degeneracy}));
  return json{{"levels", std::move(levels)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace chartherm

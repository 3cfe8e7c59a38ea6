#include <random>

#include <gtest/gtest.h>

#include "chartherm/errors.hpp"
#include "chartherm/io.hpp"

namespace chartherm {
namespace {

using nlohmann::json;

const std::string kDataDir = CHARTHERM_TEST_DATA_DIR;

TEST(SeriesJson, SchemaAndRoundTrip) {
  const PowerSeries l = generating_series(GenusKind::kL, 4);
  const json j = series_to_json(l);
  EXPECT_EQ(j, json::parse(R"({"order": 4, "coeffs": ["1", "0", "1/12", "0", "-1/720"]})"));

  std::mt19937 rng(8);
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 999);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c;
    for (int k = 0; k <= trial; ++k) c.emplace_back(num(rng), den(rng));
    const PowerSeries s(c);
    EXPECT_EQ(series_from_json(json::parse(series_to_json(s).dump())), s);
  }
}

TEST(SeriesJson, RejectsMalformed) {
  EXPECT_THROW(series_from_json(json::parse(R"({"order": 1, "coeffs": ["1"]})")), ParseError);
  EXPECT_THROW(series_from_json(json::parse(R"({"order": 0, "coeffs": [0.5]})")), ParseError);
  EXPECT_THROW(series_from_json(json::parse(R"({"coeffs": ["1"]})")), ParseError);
  EXPECT_THROW(series_from_json(json::parse(R"({"order": 0, "coeffs": ["1/0"]})")), ParseError);
}

TEST(PolynomialJson, SchemaAndRoundTrip) {
  const auto l = multiplicative_sequence(GenusKind::kL, 2);
  EXPECT_EQ(polynomial_to_json(l[2]), json::parse(R"({"degree": 2, "terms": {"p1^2": "-1/45", "p2": "7/45"}})"));
  for (const auto& p : multiplicative_sequence(GenusKind::kAHat, 4)) {
    EXPECT_EQ(polynomial_from_json(polynomial_to_json(p), ClassConvention::kPontryagin), p);
  }
  EXPECT_THROW(polynomial_from_json(json::parse(R"({"degree": 2, "terms": {"p1": "1"}})"),
                                    ClassConvention::kPontryagin),
               ParseError);
}

TEST(ManifoldJson, ReadsFileAndCanonicalizes) {
  const ManifoldClassData cp2 = manifold_from_json(read_json_file(kDataDir + "/cp2.json"));
  EXPECT_EQ(cp2.name, "CP2");
  EXPECT_EQ(cp2.l, 1);
  EXPECT_EQ(cp2.convention, ClassConvention::kPontryagin);
  EXPECT_EQ(cp2.characteristic_numbers.at("p1"), 3);
  EXPECT_EQ(cp2.chern_character_numbers.at(0), 1);

  const ManifoldClassData chern = manifold_from_json(read_json_file(kDataDir + "/cp2_chern.json"));
  EXPECT_EQ(chern.convention, ClassConvention::kChern);

  const auto m = manifold_from_json(
      json::parse(R"({"l": 3, "characteristic_numbers": {"p2*p1": "1/2", "ch1*p1^2": 4}})"));
  EXPECT_EQ(m.characteristic_numbers.at("p1*p2"), Rational(1, 2));
  EXPECT_EQ(m.characteristic_numbers.at("ch1*p1^2"), 4);
  EXPECT_EQ(manifold_from_json(manifold_to_json(m)).characteristic_numbers, m.characteristic_numbers);
}

TEST(ManifoldJson, RejectsMalformed) {
  EXPECT_THROW(manifold_from_json(json::parse(R"({"name": "x"})")), ParseError);
  EXPECT_THROW(manifold_from_json(json::parse(R"({"l": -1})")), ParseError);
  EXPECT_THROW(manifold_from_json(json::parse(R"({"l": 1, "characteristic_numbers": {"p1": 0.5}})")), ParseError);
  EXPECT_THROW(manifold_from_json(json::parse(R"({"l": 1, "chern_character_numbers": {"zero": 1}})")), ParseError);
  EXPECT_THROW(read_json_file(kDataDir + "/does_not_exist.json"), ParseError);
}

TEST(SpectrumJson, ReadsLevels) {
  const Spectrum s = spectrum_from_json(read_json_file(kDataDir + "/isotropic3d.json"));
  ASSERT_EQ(s.explicit_levels().size(), 5u);
  EXPECT_EQ(s.explicit_levels()[2].degeneracy, 6u);
  EXPECT_EQ(spectrum_to_json(s), read_json_file(kDataDir + "/isotropic3d.json"));
  EXPECT_EQ(spectrum_to_json(Spectrum::canonical_ladder(), 1), json::parse(R"({"levels": [[0.5, 1], [1.5, 1]]})"));
  EXPECT_THROW(spectrum_from_json(json::parse(R"({"levels": []})")), EmptySpectrum);
  EXPECT_THROW(spectrum_from_json(json::parse(R"({"levels": [[1.0, 0]]})")), InvalidSpectrum);
  EXPECT_THROW(spectrum_from_json(json::parse(R"({"levels": [[1.0]]})")), ParseError);
}

}  // namespace
}  // namespace chartherm

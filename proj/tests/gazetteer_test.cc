// Copyright 2026 The Terridoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "terridoc/gazetteer.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "terridoc/errors.h"
#include "terridoc/text.h"
#include "test_util.h"

namespace terridoc {
namespace {

constexpr const char *kHeader = "name,admin,class,lon,lat\n";

Gazetteer SampleGazetteer() {
  return LoadGazetteer(testing::ReadFile(testing::TestDataDir() / "sample" / "gazetteer.csv"));
}

// Spherical law of cosines; a different formula from the one under test.
double CosineLawKm(double lon1, double lat1, double lon2, double lat2) {
  const double k = std::numbers::pi / 180.0;
  const double c = std::sin(lat1 * k) * std::sin(lat2 * k) +
                   std::cos(lat1 * k) * std::cos(lat2 * k) * std::cos((lon2 - lon1) * k);
  return 6371.0 * std::acos(std::clamp(c, -1.0, 1.0));
}

TEST(LabelQualifierTest, Parses) {
  EXPECT_EQ(ParseLabelQualifier("Barèges (Hautes-Pyrénées)"),
            (LabelParts{"Barèges", std::string("Hautes-Pyrénées")}));
  EXPECT_EQ(ParseLabelQualifier("Bigorre"), (LabelParts{"Bigorre", std::nullopt}));
  EXPECT_EQ(ParseLabelQualifier("  Pyrénées   (France) "),
            (LabelParts{"Pyrénées", std::string("France")}));
  EXPECT_THROW(ParseLabelQualifier("A (B (C))"), ValidationError);
  EXPECT_THROW(ParseLabelQualifier("A (B"), ValidationError);
  EXPECT_THROW(ParseLabelQualifier("(B)"), ValidationError);
}

TEST(GazetteerTest, LoadsFixture) {
  const Gazetteer g = SampleGazetteer();
  EXPECT_EQ(g.size(), 5u);
  EXPECT_EQ(g.entries()[0].name, "Barèges");
  EXPECT_EQ(g.entries()[2].feature_class, FeatureClass::kRegion);
  EXPECT_EQ(g.entries()[4].admin, "");
}

TEST(GazetteerTest, FourNamedEntities) {
  const Gazetteer g = LoadGazetteer(std::string(kHeader) +
                                    "Barèges,Hautes-Pyrénées,commune,0.0597,42.8967\n"
                                    "Bagnères-de-Bigorre,Hautes-Pyrénées,commune,0.1494,43.065\n"
                                    "Bigorre,Hautes-Pyrénées,région,0.0781,43.1\n"
                                    "Béarn,Pyrénées-Atlantiques,région,-0.45,43.3\n");
  EXPECT_EQ(g.size(), 4u);
}

TEST(GazetteerTest, Resolve) {
  const Gazetteer g = SampleGazetteer();
  const SpatialMatch m = Resolve("Barèges (Hautes-Pyrénées)", g);
  EXPECT_EQ(m.status, MatchStatus::kMatched);
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].name, "Barèges");
  EXPECT_EQ(Resolve("Eaux minérales", g).status, MatchStatus::kUnmatched);
  EXPECT_EQ(Resolve("BIGORRE", g).status, MatchStatus::kMatched);
  EXPECT_EQ(Resolve("Bareges", g).status, MatchStatus::kUnmatched);
  EXPECT_EQ(Resolve("Barèges (Gers)", g).status, MatchStatus::kUnmatched);
  EXPECT_EQ(Resolve("Hautes-Pyrénées (France)", g).status, MatchStatus::kMatched);
  EXPECT_EQ(Resolve("A (B", g).status, MatchStatus::kUnmatched);
}

TEST(GazetteerTest, DuplicateNameIsAmbiguous) {
  const Gazetteer g = LoadGazetteer(std::string(kHeader) +
                                    "Sainte-Marie,Hautes-Pyrénées,commune,0.5,43.0\n"
                                    "Sainte-Marie,Doubs,commune,6.7,47.5\n");
  const SpatialMatch m = g.Resolve("Sainte-Marie");
  EXPECT_EQ(m.status, MatchStatus::kAmbiguous);
  EXPECT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(g.Resolve("Sainte-Marie (Doubs)").status, MatchStatus::kMatched);
  EXPECT_EQ(g.NameCount("sainte-marie"), 2u);
}

TEST(GazetteerTest, CountryAllowlistIsConfigurable) {
  const std::string csv = std::string(kHeader) + "Pyrénées,,région,0.5,42.8\n";
  EXPECT_EQ(LoadGazetteer(csv).Resolve("Pyrénées (France)").status, MatchStatus::kMatched);
  EXPECT_EQ(LoadGazetteer(csv, {}).Resolve("Pyrénées (France)").status, MatchStatus::kUnmatched);
  EXPECT_EQ(LoadGazetteer(csv).Resolve("Pyrénées (Espagne)").status, MatchStatus::kUnmatched);
}

TEST(GazetteerTest, HeaderOnly) {
  const Gazetteer g = LoadGazetteer(kHeader);
  EXPECT_EQ(g.size(), 0u);
  EXPECT_EQ(g.Resolve("Barèges").status, MatchStatus::kUnmatched);
}

TEST(GazetteerTest, QuotedFieldsAndBom) {
  const Gazetteer g = LoadGazetteer("\xEF\xBB\xBFname,admin,class,lon,lat\r\n"
                                    "\"Pic du Midi, de Bigorre\",\"Hautes-\"\"Pyr\"\"\",pic,0.14,42.93\r\n");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.entries()[0].name, "Pic du Midi, de Bigorre");
  EXPECT_EQ(g.entries()[0].admin, "Hautes-\"Pyr\"");
}

TEST(GazetteerTest, LoadErrors) {
  EXPECT_THROW(LoadGazetteer(""), ParseError);
  EXPECT_THROW(LoadGazetteer("name,lon,lat\nA,1,2\n"), ParseError);
  EXPECT_THROW(LoadGazetteer(std::string(kHeader) + "A,,commune,0.1,95\n"), ValidationError);
  EXPECT_THROW(LoadGazetteer(std::string(kHeader) + "A,,commune,181,0\n"), ValidationError);
  EXPECT_THROW(LoadGazetteer(std::string(kHeader) + "A,,commune,abc,0\n"), ValidationError);
  EXPECT_THROW(LoadGazetteer(std::string(kHeader) + "A,,volcan,0,0\n"), ValidationError);
  EXPECT_THROW(LoadGazetteer(std::string(kHeader) + "A,,commune,0\n"), ValidationError);
  try {
    LoadGazetteer(std::string(kHeader) + "A,,commune,0,0\nB,,commune,0,95\n");
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos) << e.what();
  }
}

TEST(GazetteerPropertyTest, QualifierRestrictsAndNamesAgree) {
  static const char *kNames[] = {"Luz", "Gèdre", "Sainte-Marie", "Arreau"};
  static const char *kAdmins[] = {"", "Hautes-Pyrénées", "Gers", "France"};
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<GazetteerEntry> entries;
    for (int k = pick(rng) + pick(rng); k > 0; --k) {
      entries.push_back({kNames[pick(rng)], kAdmins[pick(rng)], FeatureClass::kCommune, 0.0, 0.0});
    }
    const Gazetteer g(entries);
    for (const char *name : kNames) {
      const SpatialMatch bare = g.Resolve(name);
      EXPECT_EQ(g.Resolve(name).entries, bare.entries);
      for (const auto &e : bare.entries) EXPECT_EQ(NormalizeLabel(e.name), NormalizeLabel(name));
      const std::set<GazetteerEntry> bare_set(bare.entries.begin(), bare.entries.end());
      for (const char *admin : kAdmins) {
        if (*admin == '\0') continue;
        const SpatialMatch q = g.Resolve(std::string(name) + " (" + admin + ")");
        for (const auto &e : q.entries) EXPECT_TRUE(bare_set.contains(e));
      }
    }
  }
}

TEST(HaversineTest, AgreesWithCosineLaw) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> lon(-10, 10), lat(35, 55);
  for (int k = 0; k < 200; ++k) {
    const double a = lon(rng), b = lat(rng), c = lon(rng), d = lat(rng);
    EXPECT_NEAR(HaversineKm(a, b, c, d), CosineLawKm(a, b, c, d), 1e-6);
  }
  EXPECT_DOUBLE_EQ(HaversineKm(0.1, 43.0, 0.1, 43.0), 0.0);
  // One degree of latitude on a 6371 km sphere.
  EXPECT_NEAR(HaversineKm(0, 42, 0, 43), 6371.0 * std::numbers::pi / 180.0, 1e-9);
}

}  // namespace
}  // namespace terridoc

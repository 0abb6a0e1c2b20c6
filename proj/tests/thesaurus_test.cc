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

#include "terridoc/thesaurus.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "terridoc/errors.h"
#include "terridoc/text.h"
#include "test_util.h"

namespace terridoc {
namespace {

Thesaurus SampleThesaurus() {
  return LoadThesaurus(testing::ReadFile(testing::TestDataDir() / "sample" / "thesaurus.jsonl"));
}

ThesaurusRecord Rec(std::string id, std::string pref, std::vector<std::string> tg = {},
                    std::vector<std::string> ta = {}) {
  return ThesaurusRecord{std::move(id), std::move(pref), {}, std::move(tg), std::move(ta), {}};
}

TEST(ThesaurusTest, LoadsFixture) {
  const Thesaurus t = SampleThesaurus();
  EXPECT_EQ(t.records().size(), 10u);
  const ThesaurusRecord *r01 = t.Find("r01");
  ASSERT_NE(r01, nullptr);
  EXPECT_EQ(r01->used_for, (std::vector<std::string>{"Stations thermales", "Villes d'eaux"}));
  EXPECT_TRUE(r01->note.has_value());
  EXPECT_EQ(t.Find("nope"), nullptr);
}

TEST(ThesaurusTest, Lookup) {
  const Thesaurus t = SampleThesaurus();
  EXPECT_EQ(Lookup("eaux minérales", t), "r04");
  EXPECT_EQ(Lookup("  EAUX   MINÉRALES", t), "r04");
  EXPECT_EQ(Lookup("Atlantide", t), std::nullopt);
}

TEST(ThesaurusTest, UsedForRedirectsToCanonical) {
  const Thesaurus t({ThesaurusRecord{"a", "Thermalisme", {"Cures thermales"}, {}, {}, {}}});
  EXPECT_EQ(t.Lookup("Cures thermales"), "a");
  EXPECT_EQ(t.Lookup("cures THERMALES"), "a");
}

TEST(ThesaurusTest, RejectsDanglingReference) {
  EXPECT_THROW(Thesaurus({Rec("a", "A", {"zz"})}), ValidationError);
  EXPECT_THROW(Thesaurus({Rec("a", "A", {}, {"zz"})}), ValidationError);
}

TEST(ThesaurusTest, RejectsSelfLinkAndDuplicateId) {
  EXPECT_THROW(Thesaurus({Rec("a", "A", {"a"})}), ValidationError);
  EXPECT_THROW(Thesaurus({Rec("a", "A"), Rec("a", "B")}), ValidationError);
}

TEST(ThesaurusTest, RejectsGenericCycleWithPath) {
  try {
    Thesaurus({Rec("a", "A", {"b"}), Rec("b", "B", {"c"}), Rec("c", "C", {"a"})});
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("->"), std::string::npos);
  }
}

TEST(ThesaurusTest, AllowsPolyHierarchyAndAssociatedCycles) {
  EXPECT_NO_THROW(Thesaurus({Rec("a", "A", {"b", "c"}), Rec("b", "B", {"d"}), Rec("c", "C", {"d"}),
                             Rec("d", "D", {}, {"a"})}));
}

TEST(ThesaurusTest, RejectsDuplicateNormalizedLabel) {
  EXPECT_THROW(Thesaurus({Rec("a", "Eaux"), Rec("b", "EAUX ")}), ValidationError);
  EXPECT_THROW(Thesaurus({ThesaurusRecord{"a", "A", {"B"}, {}, {}, {}}, Rec("b", "B")}),
               ValidationError);
}

TEST(LoadThesaurusTest, Errors) {
  try {
    LoadThesaurus("{\"id\": \"a\", \"pref\": \"A\"}\n{broken\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(LoadThesaurus("{\"id\": \"a\"}\n"), ParseError);
  EXPECT_THROW(LoadThesaurus("{\"id\": \"a\", \"pref\": 3}\n"), ParseError);
  EXPECT_TRUE(LoadThesaurus("\n\n").records().empty());
}

TEST(ThesaurusPropertyTest, TotalIndex) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto records = testing::RandomAcyclicRecords(rng, 40);
    const Thesaurus t(records);
    for (const auto &r : records) {
      EXPECT_EQ(t.Lookup(r.pref_label), r.id);
      for (const auto &alt : r.used_for) EXPECT_EQ(t.Lookup(alt), r.id);
    }
  }
}

TEST(ThesaurusPropertyTest, LineOrderInsensitive) {
  const std::string content = testing::ReadFile(testing::TestDataDir() / "sample" / "thesaurus.jsonl");
  std::vector<std::string> lines;
  std::istringstream in(content);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  const Thesaurus reference = LoadThesaurus(content);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string shuffled;
    for (const auto &line : lines) shuffled += line + "\n";
    EXPECT_EQ(LoadThesaurus(shuffled), reference);
  }
}

}  // namespace
}  // namespace terridoc

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

#include "terridoc/patterns.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <utility>

#include "terridoc/text.h"
#include "test_util.h"

namespace terridoc {
namespace {

using Pair = std::pair<std::string, std::string>;

class PatternsTest : public ::testing::Test {
 protected:
  std::vector<ExtractionCandidate> Match(const std::string &text,
                                         TextField field = TextField::kTitle) {
    const auto tokens = Tokenize(text, lexicon_);
    return MatchPatterns(tokens, text, "n", field);
  }

  // (qualifier or "", proper name) pairs.
  std::vector<Pair> Pairs(const std::string &text) {
    std::vector<Pair> out;
    for (const auto &c : Match(text)) out.emplace_back(c.qualifier_np.value_or(""), c.proper_name);
    return out;
  }

  Lexicon lexicon_ = testing::DefaultLexicon();
};

std::string Slice(const std::string &text, std::pair<size_t, size_t> span) {
  const std::u32string cps = DecodeUtf8(text);
  return EncodeUtf8(std::u32string_view(cps).substr(span.first, span.second - span.first));
}

TEST_F(PatternsTest, TokenizeElision) {
  const auto tokens = Tokenize("d'Ossau", lexicon_);
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].surface, "d'");
  EXPECT_EQ(tokens[0].tag, Tag::kPrep);
  EXPECT_EQ(tokens[1].surface, "Ossau");
  EXPECT_EQ(tokens[1].tag, Tag::kCap);
  EXPECT_EQ(tokens[1].start, 2u);
  EXPECT_EQ(tokens[1].end, 7u);
}

TEST_F(PatternsTest, TokenizeTags) {
  const auto tokens = Tokenize("Les eaux de Bagnères-de-Bigorre, en 1750.", lexicon_);
  std::vector<Tag> tags;
  for (const auto &t : tokens) tags.push_back(t.tag);
  EXPECT_EQ(tags, (std::vector<Tag>{Tag::kDet, Tag::kLow, Tag::kPrep, Tag::kCap, Tag::kPunct,
                                    Tag::kPrep, Tag::kNum, Tag::kPunct}));
  EXPECT_TRUE(tokens[0].sentence_initial);
  EXPECT_FALSE(tokens[1].sentence_initial);
  EXPECT_EQ(tokens[3].surface, "Bagnères-de-Bigorre");
}

TEST_F(PatternsTest, SentenceInitialAfterStop) {
  const auto tokens = Tokenize("Voyage. Retour", lexicon_);
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_TRUE(tokens[0].sentence_initial);
  EXPECT_TRUE(tokens[2].sentence_initial);
}

TEST_F(PatternsTest, SampleTitle) {
  EXPECT_EQ(Pairs(testing::kSampleTitle),
            (std::vector<Pair>{{"eaux", "Barèges"}, {"eaux minérales", "Bigorre"},
                               {"eaux minérales", "Béarn"}}));
  const auto c = Match(testing::kSampleTitle);
  EXPECT_EQ(c[0].pattern, PatternId::kP1);
  EXPECT_EQ(c[1].pattern, PatternId::kP1);
  EXPECT_EQ(c[2].pattern, PatternId::kP2);
}

TEST_F(PatternsTest, SampleLegendBridgesParticle) {
  const auto c = Match(testing::kSampleLegend, TextField::kLegend);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].proper_name, "Théophile de Bourdeu");
  EXPECT_EQ(c[0].pattern, PatternId::kP3);
  EXPECT_FALSE(c[0].qualifier_np.has_value());
  EXPECT_EQ(c[0].field, TextField::kLegend);
}

TEST_F(PatternsTest, SentenceInitialSingleCapSkipped) {
  EXPECT_TRUE(Match("Voyage pittoresque").empty());
  EXPECT_EQ(Pairs("Souvenirs, Cauterets"), (std::vector<Pair>{{"", "Cauterets"}}));
}

TEST_F(PatternsTest, NoCapRun) {
  EXPECT_TRUE(Match("les eaux de la source").empty());
  EXPECT_TRUE(Match("").empty());
}

TEST_F(PatternsTest, QualifierCappedAtFourTokens) {
  const auto c = Match("les a b c d e f de Luz");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].qualifier_np, "c d e f");
}

TEST_F(PatternsTest, CoordinationSharesQualifier) {
  const auto c = Match("les vallées de Luz, et de Gèdre et d'Aure ou Barèges");
  std::set<std::string> qualifiers;
  for (const auto &x : c) {
    if (x.pattern != PatternId::kP3) qualifiers.insert(x.qualifier_np.value_or("?"));
  }
  EXPECT_EQ(qualifiers, std::set<std::string>{"vallées"});
}

TEST_F(PatternsTest, SpansSliceAndAreDisjoint) {
  static const char *kPieces[] = {"les", "eaux", "de", "Barèges", "et", "du", "Béarn", ",", ".",
                                  "Pic", "d'Ossau", "la", "vallée", "Luz-Saint-Sauveur", "18e",
                                  "à", "l'", "Église", "ou", "«Gavarnie»"};
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> len(0, 25);
  std::uniform_int_distribution<int> pick(0, std::size(kPieces) - 1);
  for (int trial = 0; trial < 400; ++trial) {
    std::string text;
    for (int k = len(rng); k > 0; --k) {
      if (!text.empty()) text += " ";
      text += kPieces[pick(rng)];
    }
    const auto candidates = Match(text);
    EXPECT_EQ(Match(text), candidates);
    std::vector<std::pair<size_t, size_t>> spans;
    for (const auto &c : candidates) {
      EXPECT_EQ(Slice(text, c.span), c.proper_name) << text;
      EXPECT_LE(c.span.second, DecodeUtf8(text).size());
      for (const auto &s : spans) {
        EXPECT_TRUE(c.span.second <= s.first || s.second <= c.span.first) << text;
      }
      spans.push_back(c.span);
    }
  }
}

TEST_F(PatternsTest, ParallelMatchesSerial) {
  std::vector<Notice> notices;
  for (int k = 0; k < 300; ++k) {
    notices.push_back(Notice{"n" + std::to_string(1000 + k), {},
                             std::string(testing::kSampleTitle) + " " + std::to_string(k),
                             k % 2 ? std::optional<std::string>(testing::kSampleLegend) : std::nullopt});
  }
  const auto parallel = ExtractCandidates(notices, lexicon_);
  EXPECT_EQ(parallel, ExtractCandidatesSerial(notices, lexicon_));
  EXPECT_EQ(parallel.size(), 300u * 3 + 150u);
}

TEST(StripPluralTest, Examples) {
  EXPECT_EQ(StripPlural("eaux minérales"), "eau minérale");
  EXPECT_EQ(StripPlural("eau"), "eau");
}

TerridocGraph GraphWith(std::vector<std::string> labels) {
  TerridocGraph g;
  for (const auto &label : labels) {
    TermNode node;
    node.id = Slugify(label);
    node.label = label;
    g.nodes[node.id] = node;
  }
  return g;
}

ExtractionCandidate Cand(std::optional<std::string> qualifier, std::string name) {
  return ExtractionCandidate{std::move(name), std::move(qualifier), "n", TextField::kTitle, {0, 1},
                             qualifier ? PatternId::kP1 : PatternId::kP3};
}

TEST(LinkQualifiersTest, Rules) {
  const TerridocGraph g = GraphWith({"Eaux minérales", "Eau minérale", "Eau"});
  const std::vector<ExtractionCandidate> cands = {
      Cand("eaux minérales", "Bigorre"), Cand("eaux", "Barèges"), Cand(std::nullopt, "Béarn"),
      Cand("sources", "Luz")};
  const auto linked = LinkQualifiers(cands, g);
  ASSERT_EQ(linked.size(), 4u);
  EXPECT_EQ(linked[0].node_id, "eaux_minerales");
  EXPECT_FALSE(linked[0].via_plural);
  EXPECT_EQ(linked[1].node_id, "eau");
  EXPECT_TRUE(linked[1].via_plural);
  EXPECT_EQ(linked[2].node_id, std::nullopt);
  EXPECT_EQ(linked[3].node_id, std::nullopt);
}

TEST(LinkQualifiersTest, PluralRuleFires) {
  const TerridocGraph g = GraphWith({"Eau minérale"});
  const auto linked = LinkQualifiers(std::vector{Cand("eaux minérales", "Bigorre")}, g);
  EXPECT_EQ(linked[0].node_id, "eau_minerale");
  EXPECT_TRUE(linked[0].via_plural);
}

}  // namespace
}  // namespace terridoc

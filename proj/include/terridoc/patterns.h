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

#ifndef TERRIDOC_PATTERNS_H_
#define TERRIDOC_PATTERNS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "terridoc/lexicon.h"
#include "terridoc/notice.h"
#include "terridoc/terridoc_graph.h"

namespace terridoc {

enum class Tag { kDet, kPrep, kCc, kPunct, kCap, kLow, kNum };

std::string_view ToString(Tag tag);

// Offsets count Unicode code points into the tokenized text; [start, end).
struct Token {
  std::string surface;
  size_t start = 0;
  size_t end = 0;
  Tag tag = Tag::kLow;
  bool sentence_initial = false;

  bool operator==(const Token &) const = default;
};

// Splits on white space and punctuation, keeping hyphenated compounds whole
// and splitting French elisions ("d'Ossau" -> "d'", "Ossau"). Closed-class
// words are tagged from the lexicon (preposition before determiner before
// conjunction), the rest by their first character.
std::vector<Token> Tokenize(std::string_view text, const Lexicon &lexicon);

enum class PatternId { kP1, kP2, kP3 };
enum class TextField { kTitle, kLegend };

std::string_view ToString(PatternId id);
std::string_view ToString(TextField field);

struct ExtractionCandidate {
  std::string proper_name;
  std::optional<std::string> qualifier_np;  // present for P1/P2, absent for P3
  std::string notice_id;
  TextField field = TextField::kTitle;
  std::pair<size_t, size_t> span;  // code point offsets of proper_name
  PatternId pattern = PatternId::kP3;

  bool operator==(const ExtractionCandidate &) const = default;
};

// Greedy left-to-right matcher:
//   P1  [DET] LOW+ PREP CAPRUN        qualifier = last <= 4 LOW tokens
//   P2  P1 (CC [PREP|DET] CAPRUN)+    one candidate per coordinated run
//   P3  CAPRUN left over              skipped when it is a single
//                                     sentence-initial capitalized word
// A CAPRUN is capitalized tokens optionally bridged by de/du/des/d'/de la.
// `text` is the string that produced `tokens`; names are sliced from it.
std::vector<ExtractionCandidate> MatchPatterns(std::span<const Token> tokens,
                                               std::string_view text,
                                               std::string_view notice_id,
                                               TextField field = TextField::kTitle);

// Tokenize + MatchPatterns over TITRE and LEGENDE of every notice, in
// parallel; output sorted by (notice id, field, span).
std::vector<ExtractionCandidate> ExtractCandidates(std::span<const Notice> notices,
                                                   const Lexicon &lexicon);

// Single-threaded reference for ExtractCandidates.
std::vector<ExtractionCandidate> ExtractCandidatesSerial(std::span<const Notice> notices,
                                                         const Lexicon &lexicon);

struct LinkedCandidate {
  ExtractionCandidate candidate;
  std::optional<std::string> node_id;
  bool via_plural = false;

  bool operator==(const LinkedCandidate &) const = default;
};

// Drops a final "s" or "x" from every word: "eaux minérales" -> "eau minérale".
std::string StripPlural(std::string_view normalized);

// Links each qualifier to a graph node by normalized label, falling back to
// plural-stripped comparison. Ties go to the smallest node id.
std::vector<LinkedCandidate> LinkQualifiers(std::span<const ExtractionCandidate> candidates,
                                            const TerridocGraph &graph);

}  // namespace terridoc

#endif  // TERRIDOC_PATTERNS_H_

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

#ifndef TERRIDOC_LEXICON_H_
#define TERRIDOC_LEXICON_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

namespace terridoc {

// Closed-class French word lists used by the tagger. Entries are stored
// normalized (NormalizeLabel), so lookups are case-insensitive.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::set<std::string> determiners, std::set<std::string> prepositions,
          std::set<std::string> conjunctions);

  bool IsDeterminer(std::string_view word) const;
  bool IsPreposition(std::string_view word) const;
  bool IsConjunction(std::string_view word) const;

 private:
  std::set<std::string> determiners_;
  std::set<std::string> prepositions_;
  std::set<std::string> conjunctions_;
};

// Reads det.txt, prep.txt and cc.txt from `dir`: one word per line, blank
// lines and '#' comments ignored. Throws IoError when a file is missing.
Lexicon LoadLexicon(const std::filesystem::path &dir);

// Parses one word-list file body.
std::set<std::string> ParseWordList(std::string_view content);

}  // namespace terridoc

#endif  // TERRIDOC_LEXICON_H_

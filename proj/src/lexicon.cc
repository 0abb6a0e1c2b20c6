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

#include "terridoc/lexicon.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "terridoc/errors.h"
#include "terridoc/text.h"

namespace terridoc {
namespace {

std::set<std::string> Normalized(std::set<std::string> words) {
  std::set<std::string> out;
  for (const auto &word : words) out.insert(NormalizeLabel(word));
  return out;
}

std::string ReadList(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read lexicon file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Lexicon::Lexicon(std::set<std::string> determiners, std::set<std::string> prepositions,
                 std::set<std::string> conjunctions)
    : determiners_(Normalized(std::move(determiners))),
      prepositions_(Normalized(std::move(prepositions))),
      conjunctions_(Normalized(std::move(conjunctions))) {}

bool Lexicon::IsDeterminer(std::string_view word) const {
  return determiners_.contains(NormalizeLabel(word));
}

bool Lexicon::IsPreposition(std::string_view word) const {
  return prepositions_.contains(NormalizeLabel(word));
}

bool Lexicon::IsConjunction(std::string_view word) const {
  return conjunctions_.contains(NormalizeLabel(word));
}

std::set<std::string> ParseWordList(std::string_view content) {
  std::set<std::string> words;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string word = Trim(line);
    if (!word.empty()) words.insert(std::move(word));
  }
  return words;
}

Lexicon LoadLexicon(const std::filesystem::path &dir) {
  return Lexicon(ParseWordList(ReadList(dir / "det.txt")),
                 ParseWordList(ReadList(dir / "prep.txt")),
                 ParseWordList(ReadList(dir / "cc.txt")));
}

}  // namespace terridoc

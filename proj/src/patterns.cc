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

#include <algorithm>
#include <map>
#include <tuple>

#include <omp.h>
#include <unicode/uchar.h>

#include "terridoc/text.h"

namespace terridoc {
namespace {

constexpr size_t kMaxQualifierTokens = 4;

bool IsApostrophe(char32_t c) { return c == U'\'' || c == U'’'; }
bool IsHyphen(char32_t c) { return c == U'-' || c == U'‑'; }

bool IsWordChar(char32_t c) {
  const auto cp = static_cast<UChar32>(c);
  return u_isalnum(cp) || u_charType(cp) == U_NON_SPACING_MARK ||
         u_charType(cp) == U_COMBINING_SPACING_MARK;
}

bool IsSentenceEnd(char32_t c) { return c == U'.' || c == U'!' || c == U'?' || c == U'…'; }

// Prefixes that elide before a vowel: l'eau, d'Ossau, qu'il, jusqu'au.
bool IsElisionPrefix(std::u32string_view word) {
  static const char32_t *kPrefixes[] = {U"l",  U"d",     U"j",      U"m",      U"n",
                                        U"s",  U"t",     U"c",      U"qu",     U"jusqu",
                                        U"lorsqu", U"puisqu", U"quoiqu"};
  std::u32string lower;
  for (char32_t c : word) lower.push_back(static_cast<char32_t>(u_tolower(static_cast<UChar32>(c))));
  return std::any_of(std::begin(kPrefixes), std::end(kPrefixes),
                     [&](const char32_t *p) { return lower == p; });
}

Tag TagWord(const std::string &surface, char32_t first, const Lexicon &lexicon) {
  if (lexicon.IsPreposition(surface)) return Tag::kPrep;
  if (lexicon.IsDeterminer(surface)) return Tag::kDet;
  if (lexicon.IsConjunction(surface)) return Tag::kCc;
  const auto cp = static_cast<UChar32>(first);
  if (u_isdigit(cp)) return Tag::kNum;
  if (u_isupper(cp) || u_istitle(cp)) return Tag::kCap;
  return Tag::kLow;
}

bool IsBridgeParticle(const Token &token) {
  const std::string word = NormalizeLabel(token.surface);
  return word == "de" || word == "du" || word == "des" || word == "d'";
}

// End (exclusive) of the capitalized run starting at `begin`, or `begin` if
// tokens[begin] is not capitalized.
size_t CapRunEnd(std::span<const Token> tokens, size_t begin) {
  if (begin >= tokens.size() || tokens[begin].tag != Tag::kCap) return begin;
  size_t end = begin + 1;
  while (end < tokens.size()) {
    if (tokens[end].tag == Tag::kCap) {
      ++end;
      continue;
    }
    if (IsBridgeParticle(tokens[end])) {
      size_t next = end + 1;
      // "de la"
      if (NormalizeLabel(tokens[end].surface) == "de" && next < tokens.size() &&
          NormalizeLabel(tokens[next].surface) == "la") {
        ++next;
      }
      if (next < tokens.size() && tokens[next].tag == Tag::kCap) {
        end = next + 1;
        continue;
      }
    }
    break;
  }
  return end;
}

size_t CapCount(std::span<const Token> tokens, size_t begin, size_t end) {
  return static_cast<size_t>(std::count_if(tokens.begin() + begin, tokens.begin() + end,
                                           [](const Token &t) { return t.tag == Tag::kCap; }));
}

std::string Slice(const std::u32string &text, size_t start, size_t end) {
  return EncodeUtf8(std::u32string_view(text).substr(start, end - start));
}

std::vector<ExtractionCandidate> ExtractFromNotice(const Notice &notice, const Lexicon &lexicon) {
  std::vector<ExtractionCandidate> out;
  auto run = [&](const std::optional<std::string> &text, TextField field) {
    if (!text) return;
    const auto tokens = Tokenize(*text, lexicon);
    auto found = MatchPatterns(tokens, *text, notice.id, field);
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  };
  run(notice.title, TextField::kTitle);
  run(notice.legend, TextField::kLegend);
  return out;
}

void SortCandidates(std::vector<ExtractionCandidate> &candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ExtractionCandidate &a, const ExtractionCandidate &b) {
                     return std::tie(a.notice_id, a.field, a.span) <
                            std::tie(b.notice_id, b.field, b.span);
                   });
}

}  // namespace

std::string_view ToString(Tag tag) {
  switch (tag) {
    case Tag::kDet:
      return "DET";
    case Tag::kPrep:
      return "PREP";
    case Tag::kCc:
      return "CC";
    case Tag::kPunct:
      return "PUNCT";
    case Tag::kCap:
      return "CAP";
    case Tag::kLow:
      return "LOW";
    case Tag::kNum:
      return "NUM";
  }
  return "LOW";
}

std::string_view ToString(PatternId id) {
  switch (id) {
    case PatternId::kP1:
      return "P1";
    case PatternId::kP2:
      return "P2";
    case PatternId::kP3:
      return "P3";
  }
  return "P3";
}

std::string_view ToString(TextField field) {
  return field == TextField::kTitle ? "title" : "legend";
}

std::vector<Token> Tokenize(std::string_view text, const Lexicon &lexicon) {
  const std::u32string chars = DecodeUtf8(text);
  std::vector<Token> tokens;
  bool sentence_start = true;

  auto emit_word = [&](size_t start, size_t end) {
    Token token;
    token.start = start;
    token.end = end;
    token.surface = Slice(chars, start, end);
    token.tag = TagWord(token.surface, chars[start], lexicon);
    token.sentence_initial = sentence_start;
    sentence_start = false;
    tokens.push_back(std::move(token));
  };

  size_t i = 0;
  while (i < chars.size()) {
    const char32_t c = chars[i];
    if (u_isUWhiteSpace(static_cast<UChar32>(c))) {
      ++i;
      continue;
    }
    if (IsWordChar(c)) {
      size_t start = i;
      size_t j = i;
      while (j < chars.size()) {
        if (IsWordChar(chars[j])) {
          ++j;
        } else if ((IsHyphen(chars[j]) || IsApostrophe(chars[j])) && j + 1 < chars.size() &&
                   IsWordChar(chars[j + 1])) {
          if (IsApostrophe(chars[j]) &&
              IsElisionPrefix(std::u32string_view(chars).substr(start, j - start))) {
            emit_word(start, j + 1);
            start = j + 1;
          }
          ++j;
        } else {
          break;
        }
      }
      // A trailing elided particle with nothing after it ("l' ") keeps its
      // apostrophe.
      if (j < chars.size() && IsApostrophe(chars[j]) &&
          IsElisionPrefix(std::u32string_view(chars).substr(start, j - start))) {
        ++j;
      }
      emit_word(start, j);
      i = j;
      continue;
    }
    Token token;
    token.start = i;
    token.end = i + 1;
    token.surface = Slice(chars, i, i + 1);
    token.tag = Tag::kPunct;
    token.sentence_initial = false;
    tokens.push_back(std::move(token));
    if (IsSentenceEnd(c)) sentence_start = true;
    ++i;
  }
  return tokens;
}

std::vector<ExtractionCandidate> MatchPatterns(std::span<const Token> tokens,
                                               std::string_view text,
                                               std::string_view notice_id, TextField field) {
  const std::u32string chars = DecodeUtf8(text);
  std::vector<ExtractionCandidate> out;
  auto candidate = [&](size_t begin, size_t end, std::optional<std::string> qualifier,
                       PatternId pattern) {
    ExtractionCandidate c;
    c.span = {tokens[begin].start, tokens[end - 1].end};
    c.proper_name = Slice(chars, c.span.first, c.span.second);
    c.qualifier_np = std::move(qualifier);
    c.notice_id = std::string(notice_id);
    c.field = field;
    c.pattern = pattern;
    out.push_back(std::move(c));
  };
  auto tag_at = [&](size_t k) { return k < tokens.size() ? tokens[k].tag : Tag::kPunct; };

  size_t i = 0;
  while (i < tokens.size()) {
    // P1, extended by P2 coordinations.
    if (tag_at(i) == Tag::kDet || tag_at(i) == Tag::kLow) {
      size_t low_begin = tag_at(i) == Tag::kDet ? i + 1 : i;
      size_t low_end = low_begin;
      while (tag_at(low_end) == Tag::kLow) ++low_end;
      if (low_end > low_begin && tag_at(low_end) == Tag::kPrep) {
        const size_t cap_begin = low_end + 1;
        const size_t cap_end = CapRunEnd(tokens, cap_begin);
        if (cap_end > cap_begin) {
          low_begin = std::max(low_begin, low_end - std::min(low_end - low_begin,
                                                             kMaxQualifierTokens));
          const std::string qualifier =
              Slice(chars, tokens[low_begin].start, tokens[low_end - 1].end);
          candidate(cap_begin, cap_end, qualifier, PatternId::kP1);

          size_t pos = cap_end;
          while (tag_at(pos) == Tag::kCc) {
            size_t run_begin = pos + 1;
            if (tag_at(run_begin) == Tag::kPrep || tag_at(run_begin) == Tag::kDet) ++run_begin;
            const size_t run_end = CapRunEnd(tokens, run_begin);
            if (run_end == run_begin) break;
            candidate(run_begin, run_end, qualifier, PatternId::kP2);
            pos = run_end;
          }
          i = pos;
          continue;
        }
      }
    }
    // P3: a leftover capitalized run.
    if (tag_at(i) == Tag::kCap) {
      const size_t end = CapRunEnd(tokens, i);
      if (!(tokens[i].sentence_initial && CapCount(tokens, i, end) == 1)) {
        candidate(i, end, std::nullopt, PatternId::kP3);
      }
      i = end;
      continue;
    }
    ++i;
  }
  return out;
}

std::vector<ExtractionCandidate> ExtractCandidatesSerial(std::span<const Notice> notices,
                                                         const Lexicon &lexicon) {
  std::vector<ExtractionCandidate> out;
  for (const auto &notice : notices) {
    auto found = ExtractFromNotice(notice, lexicon);
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  SortCandidates(out);
  return out;
}

std::vector<ExtractionCandidate> ExtractCandidates(std::span<const Notice> notices,
                                                   const Lexicon &lexicon) {
  std::vector<std::vector<ExtractionCandidate>> per_notice(notices.size());
  const auto count = static_cast<std::ptrdiff_t>(notices.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    per_notice[i] = ExtractFromNotice(notices[i], lexicon);
  }
  std::vector<ExtractionCandidate> out;
  for (auto &found : per_notice) {
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  SortCandidates(out);
  return out;
}

std::string StripPlural(std::string_view normalized) {
  std::string out;
  size_t start = 0;
  while (start <= normalized.size()) {
    size_t end = normalized.find(' ', start);
    if (end == std::string_view::npos) end = normalized.size();
    std::string_view word = normalized.substr(start, end - start);
    if (word.size() > 1 && (word.back() == 's' || word.back() == 'x')) word.remove_suffix(1);
    if (!out.empty() || start > 0) out.push_back(' ');
    out.append(word);
    start = end + 1;
  }
  return out;
}

std::vector<LinkedCandidate> LinkQualifiers(std::span<const ExtractionCandidate> candidates,
                                            const TerridocGraph &graph) {
  // Nodes are visited in id order, so try_emplace keeps the smallest id.
  std::map<std::string, std::string> exact;
  std::map<std::string, std::string> stripped;
  for (const auto &[id, node] : graph.nodes) {
    const std::string key = NormalizeLabel(node.label);
    exact.try_emplace(key, id);
    stripped.try_emplace(StripPlural(key), id);
  }

  std::vector<LinkedCandidate> out;
  out.reserve(candidates.size());
  for (const auto &candidate : candidates) {
    LinkedCandidate linked{candidate, std::nullopt, false};
    if (candidate.qualifier_np) {
      const std::string key = NormalizeLabel(*candidate.qualifier_np);
      if (auto it = exact.find(key); it != exact.end()) {
        linked.node_id = it->second;
      } else if (auto st = stripped.find(StripPlural(key)); st != stripped.end()) {
        linked.node_id = st->second;
        linked.via_plural = true;
      }
    }
    out.push_back(std::move(linked));
  }
  return out;
}

}  // namespace terridoc

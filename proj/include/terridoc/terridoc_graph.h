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

#ifndef TERRIDOC_TERRIDOC_GRAPH_H_
#define TERRIDOC_TERRIDOC_GRAPH_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "terridoc/notice.h"
#include "terridoc/thesaurus.h"

namespace terridoc {

enum class TermOrigin { kCorpus, kEnrichment };
enum class RelationType { kGeneric, kAssociated, kUsedFor };

std::string_view ToString(TermOrigin origin);
std::string_view ToString(RelationType type);

struct TermNode {
  std::string id;
  std::string label;
  TermOrigin origin = TermOrigin::kCorpus;
  bool temporal = false;
  // Notices whose headings contain the term; non-empty iff origin is corpus.
  std::set<std::string> docs;
  // Notices where the term heads a heading.
  std::set<std::string> head_docs;
  // Lookup(label) in the thesaurus; a used-for label maps to its canonical
  // record. `preferred` is true when label is that record's preferred label.
  std::optional<std::string> record_id;
  bool preferred = false;
  // Scope note of the record, set only when `preferred`.
  std::optional<std::string> note;

  bool operator==(const TermNode &) const = default;
};

// Generic edges run from the narrower term (src) to the broader one (dst);
// used_for edges run from the canonical term to the alternate label.
struct TypedEdge {
  std::string src;
  std::string dst;
  RelationType type = RelationType::kGeneric;
  std::string provenance = "thesaurus";

  auto Key() const { return std::tie(src, dst, type); }
  bool operator<(const TypedEdge &other) const { return Key() < other.Key(); }
  bool operator==(const TypedEdge &other) const {
    return Key() == other.Key() && provenance == other.provenance;
  }
};

struct TerridocGraph {
  std::map<std::string, TermNode> nodes;
  std::set<TypedEdge> edges;
  size_t notice_count = 0;

  const TermNode *Find(std::string_view id) const;
  bool operator==(const TerridocGraph &) const = default;
};

struct CorpusTerm {
  std::string label;  // first spelling seen, in document order
  std::set<std::string> docs;
  std::set<std::string> head_docs;

  bool operator==(const CorpusTerm &) const = default;
};

// True for chronological subdivisions such as "18e siècle".
bool IsTemporalLabel(std::string_view label);

// Deduplicated terms from every heading position, keyed and sorted by
// NormalizeLabel. Notices are processed in parallel; the merge runs in
// notice order so the result does not depend on scheduling.
std::vector<CorpusTerm> ExtractCorpusTerms(std::span<const Notice> notices);

// Single-threaded reference for ExtractCorpusTerms.
std::vector<CorpusTerm> ExtractCorpusTermsSerial(std::span<const Notice> notices);

// Corpus terms become low-level nodes. Each term found in the thesaurus pulls
// in its canonical record, the upward generic closure, its used-for labels,
// and associated edges whose two records are both present.
TerridocGraph Enrich(std::span<const CorpusTerm> corpus_terms, const Thesaurus &thesaurus);

// ExtractCorpusTerms + Enrich, with notice_count set to notices.size().
TerridocGraph BuildTerridoc(std::span<const Notice> notices, const Thesaurus &thesaurus);

struct GraphStats {
  size_t notices = 0;
  size_t corpus_nodes = 0;
  size_t enrichment_nodes = 0;
  size_t head_nodes = 0;
  size_t generic_edges = 0;
  size_t associated_edges = 0;
  size_t used_for_edges = 0;
  size_t temporal_nodes = 0;
  std::vector<std::string> unmatched_labels;  // sorted

  bool operator==(const GraphStats &) const = default;
};

GraphStats ComputeGraphStats(const TerridocGraph &graph);

}  // namespace terridoc

#endif  // TERRIDOC_TERRIDOC_GRAPH_H_

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

#include "terridoc/terridoc_graph.h"

#include <algorithm>
#include <deque>
#include <regex>
#include <utility>

#include <omp.h>

#include "terridoc/text.h"

namespace terridoc {
namespace {

struct TermOccurrence {
  std::string key;  // normalized label
  std::string label;
  bool head = false;
};

std::vector<TermOccurrence> OccurrencesOf(const Notice &notice) {
  std::vector<TermOccurrence> out;
  for (const auto &heading : notice.headings) {
    const auto &terms = heading.terms();
    for (size_t i = 0; i < terms.size(); ++i) {
      out.push_back({NormalizeLabel(terms[i]), terms[i], i == 0});
    }
  }
  return out;
}

std::vector<CorpusTerm> MergeOccurrences(std::span<const Notice> notices,
                                         const std::vector<std::vector<TermOccurrence>> &per_notice) {
  std::map<std::string, CorpusTerm> merged;
  for (size_t n = 0; n < notices.size(); ++n) {
    for (const auto &occurrence : per_notice[n]) {
      auto [it, inserted] = merged.try_emplace(occurrence.key);
      if (inserted) it->second.label = occurrence.label;
      it->second.docs.insert(notices[n].id);
      if (occurrence.head) it->second.head_docs.insert(notices[n].id);
    }
  }
  std::vector<CorpusTerm> out;
  out.reserve(merged.size());
  for (auto &[key, term] : merged) out.push_back(std::move(term));
  return out;
}


}  // namespace

std::string_view ToString(TermOrigin origin) {
  return origin == TermOrigin::kCorpus ? "corpus" : "enrichment";
}

std::string_view ToString(RelationType type) {
  switch (type) {
    case RelationType::kGeneric:
      return "generic";
    case RelationType::kAssociated:
      return "associated";
    case RelationType::kUsedFor:
      return "used_for";
  }
  return "generic";
}

const TermNode *TerridocGraph::Find(std::string_view id) const {
  const auto it = nodes.find(std::string(id));
  return it == nodes.end() ? nullptr : &it->second;
}

bool IsTemporalLabel(std::string_view label) {
  static const std::regex kPattern("^[0-9]{1,2}e( |-)si\xC3\xA8" "cle");
  const std::string normalized = NormalizeLabel(label);
  return std::regex_search(normalized, kPattern);
}

std::vector<CorpusTerm> ExtractCorpusTermsSerial(std::span<const Notice> notices) {
  std::vector<std::vector<TermOccurrence>> per_notice;
  per_notice.reserve(notices.size());
  for (const auto &notice : notices) per_notice.push_back(OccurrencesOf(notice));
  return MergeOccurrences(notices, per_notice);
}

std::vector<CorpusTerm> ExtractCorpusTerms(std::span<const Notice> notices) {
  std::vector<std::vector<TermOccurrence>> per_notice(notices.size());
  const auto count = static_cast<std::ptrdiff_t>(notices.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    per_notice[i] = OccurrencesOf(notices[i]);
  }
  return MergeOccurrences(notices, per_notice);
}

TerridocGraph Enrich(std::span<const CorpusTerm> corpus_terms, const Thesaurus &thesaurus) {
  std::map<std::string, TermNode> drafts;  // normalized label -> node
  std::set<std::string> all_docs;

  auto ensure = [&](const std::string &label, TermOrigin origin) -> TermNode & {
    const std::string key = NormalizeLabel(label);
    auto [it, inserted] = drafts.try_emplace(key);
    TermNode &node = it->second;
    if (inserted) {
      node.label = label;
      node.origin = origin;
      node.temporal = IsTemporalLabel(label);
      node.record_id = thesaurus.Lookup(label);
      if (node.record_id) {
        const ThesaurusRecord &record = *thesaurus.Find(*node.record_id);
        node.preferred = NormalizeLabel(record.pref_label) == key;
        if (node.preferred) node.note = record.note;
      }
    }
    return node;
  };

  std::set<std::string> corpus_records;
  for (const auto &term : corpus_terms) {
    TermNode &node = ensure(term.label, TermOrigin::kCorpus);
    node.origin = TermOrigin::kCorpus;
    node.docs.insert(term.docs.begin(), term.docs.end());
    node.head_docs.insert(term.head_docs.begin(), term.head_docs.end());
    all_docs.insert(term.docs.begin(), term.docs.end());
    if (node.record_id) corpus_records.insert(*node.record_id);
  }

  // Upward generic closure of every matched record.
  std::set<std::string> present = corpus_records;
  std::deque<std::string> queue(corpus_records.begin(), corpus_records.end());
  while (!queue.empty()) {
    const std::string id = queue.front();
    queue.pop_front();
    for (const auto &parent : thesaurus.Find(id)->generic) {
      if (present.insert(parent).second) queue.push_back(parent);
    }
  }

  struct LabelEdge {
    std::string src_key;
    std::string dst_key;
    RelationType type;
  };
  std::vector<LabelEdge> label_edges;
  auto key_of = [&](const std::string &record_id) {
    return NormalizeLabel(thesaurus.Find(record_id)->pref_label);
  };

  for (const auto &id : present) {
    const ThesaurusRecord &record = *thesaurus.Find(id);
    ensure(record.pref_label, TermOrigin::kEnrichment);
    for (const auto &parent : record.generic) {
      label_edges.push_back({key_of(id), key_of(parent), RelationType::kGeneric});
    }
    for (const auto &other : record.associated) {
      if (present.contains(other)) {
        label_edges.push_back({key_of(id), key_of(other), RelationType::kAssociated});
      }
    }
  }
  for (const auto &id : corpus_records) {
    const ThesaurusRecord &record = *thesaurus.Find(id);
    for (const auto &alt : record.used_for) {
      ensure(alt, TermOrigin::kEnrichment);
      label_edges.push_back({key_of(id), NormalizeLabel(alt), RelationType::kUsedFor});
    }
  }

  // Slugs in sorted normalized-label order; collisions take _2, _3, ...
  std::map<std::string, std::string> id_of_key;
  std::set<std::string> taken;
  for (const auto &[key, node] : drafts) {
    const std::string base = Slugify(node.label);
    std::string id = base;
    for (int suffix = 2; taken.contains(id); ++suffix) id = base + "_" + std::to_string(suffix);
    taken.insert(id);
    id_of_key[key] = id;
  }

  TerridocGraph graph;
  for (auto &[key, node] : drafts) {
    node.id = id_of_key.at(key);
    graph.nodes.emplace(node.id, std::move(node));
  }
  for (const auto &edge : label_edges) {
    const std::string &src = id_of_key.at(edge.src_key);
    const std::string &dst = id_of_key.at(edge.dst_key);
    if (src == dst) continue;
    graph.edges.insert(TypedEdge{src, dst, edge.type, "thesaurus"});
  }
  graph.notice_count = all_docs.size();
  return graph;
}

TerridocGraph BuildTerridoc(std::span<const Notice> notices, const Thesaurus &thesaurus) {
  const auto terms = ExtractCorpusTerms(notices);
  TerridocGraph graph = Enrich(terms, thesaurus);
  graph.notice_count = notices.size();
  return graph;
}

GraphStats ComputeGraphStats(const TerridocGraph &graph) {
  GraphStats stats;
  stats.notices = graph.notice_count;
  for (const auto &[id, node] : graph.nodes) {
    if (node.origin == TermOrigin::kCorpus) {
      ++stats.corpus_nodes;
      if (!node.record_id) stats.unmatched_labels.push_back(node.label);
    } else {
      ++stats.enrichment_nodes;
    }
    if (!node.head_docs.empty()) ++stats.head_nodes;
    if (node.temporal) ++stats.temporal_nodes;
  }
  std::sort(stats.unmatched_labels.begin(), stats.unmatched_labels.end());
  for (const auto &edge : graph.edges) {
    switch (edge.type) {
      case RelationType::kGeneric:
        ++stats.generic_edges;
        break;
      case RelationType::kAssociated:
        ++stats.associated_edges;
        break;
      case RelationType::kUsedFor:
        ++stats.used_for_edges;
        break;
    }
  }
  return stats;
}

}  // namespace terridoc

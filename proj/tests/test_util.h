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

#ifndef TERRIDOC_TESTS_TEST_UTIL_H_
#define TERRIDOC_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "terridoc/gazetteer.h"
#include "terridoc/lexicon.h"
#include "terridoc/ontology.h"
#include "terridoc/thesaurus.h"

namespace terridoc::testing {

inline std::filesystem::path DataDir() { return TERRIDOC_DATA_DIR; }
inline std::filesystem::path TestDataDir() { return TERRIDOC_TESTDATA_DIR; }

inline std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Lexicon DefaultLexicon() { return LoadLexicon(DataDir() / "lexicon"); }

// Sample notice texts as they read after whitespace collapsing.
inline constexpr const char *kSampleTitle =
    "Précis d'observation sur les eaux de Barèges et les eaux minérales de Bigorre et du Béarn";
inline constexpr const char *kSampleLegend =
    "Théophile de Bourdeu est à l'origine de la mode du thermalisme pyrénéen";
inline constexpr const char *kSampleDee1 =
    "Stations climatiques, thermales, etc. -- Barèges (Hautes-Pyrénées) -- 18e siècle";
inline constexpr const char *kSampleDee2 = "Eaux minérales -- Pyrénées (France) -- 18e siècle";

// Random acyclic thesaurus: record k may only point to records with a
// larger index, which rules out generic cycles. Labels are "Terme <k>".
inline std::vector<ThesaurusRecord> RandomAcyclicRecords(std::mt19937 &rng, int max_records) {
  std::uniform_int_distribution<int> size_dist(1, max_records);
  const int n = size_dist(rng);
  std::vector<ThesaurusRecord> records(n);
  std::bernoulli_distribution coin(0.15);
  std::bernoulli_distribution uf_coin(0.2);
  for (int k = 0; k < n; ++k) {
    records[k].id = "r" + std::to_string(k);
    records[k].pref_label = "Terme " + std::to_string(k);
    if (uf_coin(rng)) records[k].used_for.push_back("Variante " + std::to_string(k));
  }
  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j < n; ++j) {
      if (coin(rng)) records[k].generic.push_back(records[j].id);
      if (coin(rng) && coin(rng)) records[k].associated.push_back(records[j].id);
    }
  }
  return records;
}

// Brute-force ancestor oracle: plain BFS over the raw record list, no use of
// the Thesaurus index.
inline std::set<std::string> BfsAncestors(const std::vector<ThesaurusRecord> &records,
                                          const std::string &start) {
  std::map<std::string, const ThesaurusRecord *> by_id;
  for (const auto &r : records) by_id[r.id] = &r;
  std::set<std::string> seen;
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    const std::string id = queue.front();
    queue.pop_front();
    for (const auto &parent : by_id.at(id)->generic) {
      if (seen.insert(parent).second) queue.push_back(parent);
    }
  }
  return seen;
}

// Random ontology satisfying CheckOntology, for round-trip properties.
inline Ontology RandomOntology(std::mt19937 &rng) {
  static const char *kWords[] = {"Eaux", "minérales", "Pic", "du", "Midi", "vallée", "\"quoted\"",
                                 "d'Ossau", "Gave", "station", "thermale", "Béarn", "œuvre", "\\"};
  static const FeatureClass kClasses[] = {FeatureClass::kCommune, FeatureClass::kPic,
                                          FeatureClass::kVallee, FeatureClass::kRegion,
                                          FeatureClass::kLieuDit};
  std::uniform_int_distribution<int> count(0, 12);
  std::uniform_int_distribution<int> word(0, static_cast<int>(std::size(kWords)) - 1);
  std::uniform_real_distribution<double> lon(-180.0, 180.0);
  std::uniform_real_distribution<double> lat(-90.0, 90.0);
  std::bernoulli_distribution coin(0.5);
  auto label = [&] {
    std::string out = kWords[word(rng)];
    for (int k = word(rng) % 3; k > 0; --k) out += std::string(" ") + kWords[word(rng)];
    return out;
  };
  auto docs = [&] {
    std::set<std::string> out;
    for (int k = word(rng) % 3; k > 0; --k) out.insert("n" + std::to_string(word(rng)));
    return out;
  };

  Ontology ontology;
  std::vector<std::string> concepts;
  std::vector<std::string> instances;
  const int n_concepts = count(rng);
  for (int k = 0; k < n_concepts; ++k) {
    OntoConcept c{"c" + std::to_string(k), label(), std::nullopt, coin(rng) ? "corpus" : "enrichment",
                  word(rng) == 0, docs()};
    if (coin(rng)) c.note = label();
    ontology.AddConcept(c);
    concepts.push_back(c.id);
  }
  const int n_instances = count(rng);
  if (n_instances > 0) {
    ontology.AddConcept(OntoConcept{std::string(kRootConceptId), std::string(kRootConceptLabel),
                                    std::nullopt, "root", false, {}});
    concepts.push_back(std::string(kRootConceptId));
  }
  for (int k = 0; k < n_instances; ++k) {
    GazetteerEntry entry{label(), coin(rng) ? label() : "", kClasses[word(rng) % 5], lon(rng),
                         lat(rng)};
    OntoInstance i{"i" + std::to_string(k), label(), entry, coin(rng) ? "text" : "corpus", docs()};
    ontology.AddInstance(i);
    ontology.AddEdge({i.id, std::string(kRootConceptId), OntoEdgeType::kInstanceOf, "gazetteer"});
    instances.push_back(i.id);
  }
  std::uniform_int_distribution<int> edges(0, 20);
  auto pick = [&](const std::vector<std::string> &ids) {
    return ids[std::uniform_int_distribution<size_t>(0, ids.size() - 1)(rng)];
  };
  for (int e = edges(rng); e > 0; --e) {
    const int kind = word(rng) % 5;
    if (kind <= 1 && concepts.size() >= 2) {
      const auto a = pick(concepts), b = pick(concepts);
      if (a != b) {
        ontology.AddEdge({a, b, kind == 0 ? OntoEdgeType::kSubclassGeneric : OntoEdgeType::kAssociated,
                          "thesaurus"});
      }
    } else if (kind == 2 && !concepts.empty() && !instances.empty()) {
      ontology.AddEdge({pick(concepts), pick(instances), OntoEdgeType::kInstanceOf,
                        "text:n" + std::to_string(word(rng))});
    } else if (kind == 3 && instances.size() >= 2) {
      auto a = pick(instances), b = pick(instances);
      if (a > b) std::swap(a, b);
      if (a != b) ontology.AddEdge({a, b, OntoEdgeType::kSpatialNear, "geometry"});
    } else if (kind == 4 && concepts.size() >= 2) {
      const auto a = pick(concepts), b = pick(concepts);
      if (a != b) ontology.AddEdge({a, b, OntoEdgeType::kUsedFor, "thesaurus"});
    }
  }
  return ontology;
}

}  // namespace terridoc::testing

#endif  // TERRIDOC_TESTS_TEST_UTIL_H_

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

#ifndef TERRIDOC_ONTOLOGY_H_
#define TERRIDOC_ONTOLOGY_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "terridoc/gazetteer.h"
#include "terridoc/patterns.h"
#include "terridoc/terridoc_graph.h"

namespace terridoc {

inline constexpr std::string_view kRootConceptId = "entite_spatiale";
inline constexpr std::string_view kRootConceptLabel = "Entité spatiale";

enum class OntoEdgeType {
  kSubclassGeneric,
  kAssociated,
  kUsedFor,
  kInstanceOf,
  kSpatialWithin,
  kSpatialNear,
};

std::string_view ToString(OntoEdgeType type);
std::optional<OntoEdgeType> ParseOntoEdgeType(std::string_view text);

// Provenance tokens: "thesaurus", "gazetteer", "geometry", "text:<notice id>".
inline constexpr std::string_view kProvThesaurus = "thesaurus";
inline constexpr std::string_view kProvGazetteer = "gazetteer";
inline constexpr std::string_view kProvGeometry = "geometry";
std::string TextProvenance(std::string_view notice_id);

struct OntoConcept {
  std::string id;
  std::string label;
  std::optional<std::string> note;
  std::string origin;  // corpus, enrichment, root, text
  bool temporal = false;
  std::set<std::string> docs;

  bool operator==(const OntoConcept &) const = default;
};

struct OntoInstance {
  std::string id;
  std::string label;
  GazetteerEntry entry;
  std::string origin;  // corpus, enrichment, text
  std::set<std::string> docs;

  bool operator==(const OntoInstance &) const = default;
};

struct OntoEdge {
  std::string src;
  std::string dst;
  OntoEdgeType type = OntoEdgeType::kSubclassGeneric;
  std::string provenance;

  auto Key() const { return std::tie(src, dst, type); }
  bool operator<(const OntoEdge &other) const { return Key() < other.Key(); }
  bool operator==(const OntoEdge &other) const {
    return Key() == other.Key() && provenance == other.provenance;
  }
};

class Ontology {
 public:
  const std::map<std::string, OntoConcept> &concepts() const { return concepts_; }
  const std::map<std::string, OntoInstance> &instances() const { return instances_; }
  const std::set<OntoEdge> &edges() const { return edges_; }

  bool Contains(std::string_view id) const;
  bool IsInstance(std::string_view id) const;
  bool IsConcept(std::string_view id) const;
  const OntoConcept *FindConcept(std::string_view id) const;
  const OntoInstance *FindInstance(std::string_view id) const;
  OntoInstance *MutableInstance(std::string_view id);

  // Return false (and change nothing) when the id is already taken.
  bool AddConcept(OntoConcept concept_);
  bool AddInstance(OntoInstance instance);
  // Returns false when an edge with the same (src, dst, type) exists.
  bool AddEdge(OntoEdge edge);
  // Edge between a and b of the given type in either direction.
  bool HasEdgeBetween(std::string_view a, std::string_view b, OntoEdgeType type) const;

  bool operator==(const Ontology &) const = default;

 private:
  std::map<std::string, OntoConcept> concepts_;
  std::map<std::string, OntoInstance> instances_;
  std::set<OntoEdge> edges_;
};

// Structural invariants: unique ids, edge endpoints exist, no self loops,
// instance_of touches exactly one instance, spatial edges join instances,
// gazetteer instance_of targets the root, root present when instances exist.
// Returns one message per violation.
std::vector<std::string> CheckOntology(const Ontology &ontology);

enum class LinkPolicy { kExisting, kCreate };

struct DroppedCandidate {
  std::string proper_name;
  std::string notice_id;
  std::string reason;  // "unmatched", "ambiguous"

  bool operator==(const DroppedCandidate &) const = default;
};

// Everything the builder decided not to carry over, for librarian review.
struct BuildReport {
  std::vector<std::string> unmatched_nodes;   // node ids resolved as concepts
  std::vector<std::string> ambiguous_nodes;   // node ids with several gazetteer entries
  std::vector<std::string> warnings;
  std::vector<std::string> dropped_generic;   // "src -> dst" instance-instance generics
  size_t collapsed_edges = 0;                 // merged onto an existing edge or self loop
  std::vector<DroppedCandidate> dropped_candidates;
  std::vector<std::string> unlinked_qualifiers;  // "notice: qualifier -> name"
  size_t text_links = 0;
};

// Builder state between steps: the ontology, where each graph node landed,
// and which instance stands for each gazetteer entry.
struct OntologyDraft {
  Ontology ontology;
  std::map<std::string, std::string> entity_of_node;
  std::map<GazetteerEntry, std::string> instance_of_entry;
  BuildReport report;
};

// Resolves each non-temporal node: a single gazetteer match becomes an
// instance typed under the root concept; anything else becomes a concept
// carrying the thesaurus note of its preferred label. Instances are keyed by
// gazetteer entry, so two labels naming the same place share one instance.
OntologyDraft ClassifyTerms(const TerridocGraph &graph, const Gazetteer &gazetteer);

// Carries every graph edge over: generic from an instance to a concept
// becomes instance_of, other generics subclass_generic, the rest unchanged.
// A generic between two instances becomes spatial_within when the narrower
// one's admin or qualifier names the broader one, and is dropped otherwise.
OntologyDraft RetypeEdges(const TerridocGraph &graph, OntologyDraft draft);

// Resolves each candidate name; a match becomes (or reuses) an instance and,
// when the qualifier linked to a concept, gains a concept -> instance
// instance_of edge with text provenance.
OntologyDraft InjectTextLinks(std::span<const LinkedCandidate> linked, const Gazetteer &gazetteer,
                              OntologyDraft draft, LinkPolicy policy = LinkPolicy::kExisting);

struct SpatialPair {
  std::string src;
  std::string dst;
  OntoEdgeType type;
  double distance_km;

  bool operator==(const SpatialPair &) const = default;
};

// Pairwise spatial relations over instances sorted by id: spatial_within
// when one instance's admin equals the other's name, else spatial_near when
// the haversine distance is at most near_km. Rows run in parallel.
std::vector<SpatialPair> ComputeSpatialPairs(std::span<const OntoInstance> instances,
                                             double near_km);

// Single-threaded reference for ComputeSpatialPairs.
std::vector<SpatialPair> ComputeSpatialPairsSerial(std::span<const OntoInstance> instances,
                                                   double near_km);

// Adds geometry-provenance spatial edges. A near edge is skipped when the
// pair already has a within edge.
Ontology DeriveSpatialRelations(Ontology ontology, double near_km);

struct OntologyOptions {
  bool spatial_relations = false;
  double near_km = 30.0;
  LinkPolicy link_policy = LinkPolicy::kExisting;
};

OntologyDraft BuildOntology(const TerridocGraph &graph, std::span<const LinkedCandidate> linked,
                            const Gazetteer &gazetteer, const OntologyOptions &options);

}  // namespace terridoc

#endif  // TERRIDOC_ONTOLOGY_H_

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

#include "terridoc/ontology.h"

#include <algorithm>
#include <utility>

#include <omp.h>

#include "terridoc/errors.h"
#include "terridoc/text.h"

namespace terridoc {
namespace {

std::string UniqueId(const Ontology &ontology, const std::string &base) {
  std::string id = base;
  for (int suffix = 2; ontology.Contains(id); ++suffix) id = base + "_" + std::to_string(suffix);
  return id;
}

// Creates the root concept on first use and returns its id.
std::string EnsureRoot(OntologyDraft &draft) {
  const std::string root(kRootConceptId);
  if (!draft.ontology.Contains(root)) {
    draft.ontology.AddConcept(
        OntoConcept{root, std::string(kRootConceptLabel), std::nullopt, "root", false, {}});
  }
  return root;
}

// Returns the instance for a gazetteer entry, creating it (typed under the
// root) when absent.
std::string EnsureInstance(OntologyDraft &draft, const Gazetteer &gazetteer,
                           const GazetteerEntry &entry, const std::string &label,
                           const std::string &origin) {
  if (auto it = draft.instance_of_entry.find(entry); it != draft.instance_of_entry.end()) {
    return it->second;
  }
  const std::string root = EnsureRoot(draft);
  const std::string base = gazetteer.NameCount(entry.name) > 1
                               ? Slugify(entry.name + " " + entry.admin)
                               : Slugify(entry.name);
  const std::string id = UniqueId(draft.ontology, base);
  draft.ontology.AddInstance(OntoInstance{id, label, entry, origin, {}});
  draft.ontology.AddEdge(
      OntoEdge{id, root, OntoEdgeType::kInstanceOf, std::string(kProvGazetteer)});
  draft.instance_of_entry.emplace(entry, id);
  return id;
}

bool NamesContainer(const OntoInstance &narrower, const std::string &narrower_label,
                    const OntoInstance &broader) {
  const std::string container = NormalizeLabel(broader.entry.name);
  if (!narrower.entry.admin.empty() && NormalizeLabel(narrower.entry.admin) == container) {
    return true;
  }
  try {
    const LabelParts parts = ParseLabelQualifier(narrower_label);
    return parts.qualifier && NormalizeLabel(*parts.qualifier) == container;
  } catch (const ValidationError &) {
    return false;
  }
}

// Normalized name and admin of each instance, computed once per call.
struct PlaceKey {
  std::string name;
  std::string admin;
};

std::vector<PlaceKey> PlaceKeys(std::span<const OntoInstance> instances) {
  std::vector<PlaceKey> keys(instances.size());
  for (size_t i = 0; i < instances.size(); ++i) {
    keys[i] = {NormalizeLabel(instances[i].entry.name), NormalizeLabel(instances[i].entry.admin)};
  }
  return keys;
}

void PairsForRow(std::span<const OntoInstance> instances, std::span<const PlaceKey> keys, size_t i,
                 double near_km, std::vector<SpatialPair> &out) {
  const OntoInstance &a = instances[i];
  const PlaceKey &ak = keys[i];
  for (size_t j = i + 1; j < instances.size(); ++j) {
    const OntoInstance &b = instances[j];
    const PlaceKey &bk = keys[j];
    const double distance = HaversineKm(a.entry.lon, a.entry.lat, b.entry.lon, b.entry.lat);
    bool within = false;
    if (!ak.admin.empty() && ak.admin == bk.name) {
      out.push_back({a.id, b.id, OntoEdgeType::kSpatialWithin, distance});
      within = true;
    }
    if (!bk.admin.empty() && bk.admin == ak.name) {
      out.push_back({b.id, a.id, OntoEdgeType::kSpatialWithin, distance});
      within = true;
    }
    if (!within && distance <= near_km) {
      out.push_back({a.id, b.id, OntoEdgeType::kSpatialNear, distance});
    }
  }
}

}  // namespace

std::string_view ToString(OntoEdgeType type) {
  switch (type) {
    case OntoEdgeType::kSubclassGeneric:
      return "subclass_generic";
    case OntoEdgeType::kAssociated:
      return "associated";
    case OntoEdgeType::kUsedFor:
      return "used_for";
    case OntoEdgeType::kInstanceOf:
      return "instance_of";
    case OntoEdgeType::kSpatialWithin:
      return "spatial_within";
    case OntoEdgeType::kSpatialNear:
      return "spatial_near";
  }
  return "associated";
}

std::optional<OntoEdgeType> ParseOntoEdgeType(std::string_view text) {
  for (auto type : {OntoEdgeType::kSubclassGeneric, OntoEdgeType::kAssociated,
                    OntoEdgeType::kUsedFor, OntoEdgeType::kInstanceOf,
                    OntoEdgeType::kSpatialWithin, OntoEdgeType::kSpatialNear}) {
    if (ToString(type) == text) return type;
  }
  return std::nullopt;
}

std::string TextProvenance(std::string_view notice_id) {
  return "text:" + std::string(notice_id);
}

bool Ontology::Contains(std::string_view id) const { return IsConcept(id) || IsInstance(id); }

bool Ontology::IsInstance(std::string_view id) const {
  return instances_.contains(std::string(id));
}

bool Ontology::IsConcept(std::string_view id) const { return concepts_.contains(std::string(id)); }

const OntoConcept *Ontology::FindConcept(std::string_view id) const {
  const auto it = concepts_.find(std::string(id));
  return it == concepts_.end() ? nullptr : &it->second;
}

const OntoInstance *Ontology::FindInstance(std::string_view id) const {
  const auto it = instances_.find(std::string(id));
  return it == instances_.end() ? nullptr : &it->second;
}

OntoInstance *Ontology::MutableInstance(std::string_view id) {
  const auto it = instances_.find(std::string(id));
  return it == instances_.end() ? nullptr : &it->second;
}

bool Ontology::AddConcept(OntoConcept concept_) {
  if (Contains(concept_.id)) return false;
  const std::string id = concept_.id;
  concepts_.emplace(id, std::move(concept_));
  return true;
}

bool Ontology::AddInstance(OntoInstance instance) {
  if (Contains(instance.id)) return false;
  const std::string id = instance.id;
  instances_.emplace(id, std::move(instance));
  return true;
}

bool Ontology::AddEdge(OntoEdge edge) { return edges_.insert(std::move(edge)).second; }

bool Ontology::HasEdgeBetween(std::string_view a, std::string_view b, OntoEdgeType type) const {
  auto has = [&](std::string_view src, std::string_view dst) {
    OntoEdge probe{std::string(src), std::string(dst), type, {}};
    return edges_.contains(probe);
  };
  return has(a, b) || has(b, a);
}

std::vector<std::string> CheckOntology(const Ontology &ontology) {
  std::vector<std::string> problems;
  for (const auto &[id, concept_] : ontology.concepts()) {
    if (ontology.IsInstance(id)) problems.push_back("id '" + id + "' is both concept and instance");
    if (id != concept_.id) problems.push_back("concept key mismatch for '" + id + "'");
  }
  for (const auto &[id, instance] : ontology.instances()) {
    if (id != instance.id) problems.push_back("instance key mismatch for '" + id + "'");
  }
  if (!ontology.instances().empty() && !ontology.IsConcept(kRootConceptId)) {
    problems.push_back("instances exist but the root concept is missing");
  }
  for (const auto &edge : ontology.edges()) {
    const std::string name = edge.src + " -" + std::string(ToString(edge.type)) + "-> " + edge.dst;
    if (!ontology.Contains(edge.src) || !ontology.Contains(edge.dst)) {
      problems.push_back("edge " + name + " has a missing endpoint");
      continue;
    }
    if (edge.src == edge.dst) problems.push_back("edge " + name + " is a self loop");
    const bool src_instance = ontology.IsInstance(edge.src);
    const bool dst_instance = ontology.IsInstance(edge.dst);
    switch (edge.type) {
      case OntoEdgeType::kInstanceOf:
        if (src_instance == dst_instance) {
          problems.push_back("instance_of edge " + name + " must touch exactly one instance");
        }
        if (edge.provenance == kProvGazetteer && edge.dst != kRootConceptId) {
          problems.push_back("gazetteer instance_of edge " + name + " must target the root");
        }
        break;
      case OntoEdgeType::kSpatialWithin:
      case OntoEdgeType::kSpatialNear:
        if (!src_instance || !dst_instance) {
          problems.push_back("spatial edge " + name + " must join two instances");
        }
        break;
      default:
        break;
    }
    if (edge.type == OntoEdgeType::kSpatialNear && edge.src > edge.dst) {
      problems.push_back("spatial_near edge " + name + " is not in sorted endpoint order");
    }
  }
  return problems;
}

OntologyDraft ClassifyTerms(const TerridocGraph &graph, const Gazetteer &gazetteer) {
  std::vector<const TermNode *> nodes;
  nodes.reserve(graph.nodes.size());
  for (const auto &[id, node] : graph.nodes) nodes.push_back(&node);

  // Gazetteer lookups are independent; resolve them in parallel.
  std::vector<SpatialMatch> matches(nodes.size());
  const auto count = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (!nodes[i]->temporal) matches[i] = gazetteer.Resolve(nodes[i]->label);
  }

  OntologyDraft draft;
  std::vector<size_t> spatial;
  // Concepts first so that node slugs keep their ids.
  for (size_t i = 0; i < nodes.size(); ++i) {
    const TermNode &node = *nodes[i];
    if (!node.temporal && matches[i].status == MatchStatus::kMatched) {
      spatial.push_back(i);
      continue;
    }
    if (!node.temporal) {
      (matches[i].status == MatchStatus::kAmbiguous ? draft.report.ambiguous_nodes
                                                    : draft.report.unmatched_nodes)
          .push_back(node.id);
    }
    OntoConcept concept_;
    concept_.id = node.id;
    concept_.label = node.label;
    concept_.origin = std::string(ToString(node.origin));
    concept_.temporal = node.temporal;
    concept_.docs = node.docs;
    concept_.note = node.note;
    draft.ontology.AddConcept(std::move(concept_));
    draft.entity_of_node[node.id] = node.id;
  }
  for (size_t i : spatial) {
    const TermNode &node = *nodes[i];
    const GazetteerEntry &entry = matches[i].entries.front();
    const std::string id =
        EnsureInstance(draft, gazetteer, entry, node.label, std::string(ToString(node.origin)));
    OntoInstance *instance = draft.ontology.MutableInstance(id);
    instance->docs.insert(node.docs.begin(), node.docs.end());
    if (node.origin == TermOrigin::kCorpus) instance->origin = "corpus";
    draft.entity_of_node[node.id] = id;
  }
  return draft;
}

OntologyDraft RetypeEdges(const TerridocGraph &graph, OntologyDraft draft) {
  Ontology &ontology = draft.ontology;
  for (const auto &edge : graph.edges) {
    const std::string &src = draft.entity_of_node.at(edge.src);
    const std::string &dst = draft.entity_of_node.at(edge.dst);
    if (src == dst) {
      ++draft.report.collapsed_edges;
      continue;
    }
    OntoEdge out{src, dst, OntoEdgeType::kAssociated, std::string(kProvThesaurus)};
    switch (edge.type) {
      case RelationType::kGeneric: {
        const bool src_instance = ontology.IsInstance(src);
        const bool dst_instance = ontology.IsInstance(dst);
        if (src_instance && dst_instance) {
          const std::string name = src + " -> " + dst;
          if (NamesContainer(*ontology.FindInstance(src), graph.nodes.at(edge.src).label,
                             *ontology.FindInstance(dst))) {
            draft.report.warnings.push_back("generic edge between instances " + name +
                                            " kept as spatial_within");
            out.type = OntoEdgeType::kSpatialWithin;
          } else {
            draft.report.warnings.push_back("generic edge between instances " + name +
                                            " dropped");
            draft.report.dropped_generic.push_back(name);
            continue;
          }
        } else if (src_instance) {
          out.type = OntoEdgeType::kInstanceOf;
        } else {
          out.type = OntoEdgeType::kSubclassGeneric;
        }
        break;
      }
      case RelationType::kAssociated:
        out.type = OntoEdgeType::kAssociated;
        break;
      case RelationType::kUsedFor:
        out.type = OntoEdgeType::kUsedFor;
        break;
    }
    if (!ontology.AddEdge(std::move(out))) ++draft.report.collapsed_edges;
  }
  return draft;
}

OntologyDraft InjectTextLinks(std::span<const LinkedCandidate> linked, const Gazetteer &gazetteer,
                              OntologyDraft draft, LinkPolicy policy) {
  for (const auto &item : linked) {
    const ExtractionCandidate &candidate = item.candidate;
    const SpatialMatch match = gazetteer.Resolve(candidate.proper_name);
    if (match.status != MatchStatus::kMatched) {
      draft.report.dropped_candidates.push_back(
          {candidate.proper_name, candidate.notice_id, std::string(ToString(match.status))});
      continue;
    }
    const std::string instance_id = EnsureInstance(draft, gazetteer, match.entries.front(),
                                                   match.entries.front().name, "text");
    draft.ontology.MutableInstance(instance_id)->docs.insert(candidate.notice_id);
    if (!candidate.qualifier_np) continue;

    std::optional<std::string> concept_id;
    if (item.node_id) {
      const auto it = draft.entity_of_node.find(*item.node_id);
      if (it != draft.entity_of_node.end() && draft.ontology.IsConcept(it->second) &&
          it->second != kRootConceptId) {
        concept_id = it->second;
      }
    } else if (policy == LinkPolicy::kCreate) {
      const std::string key = NormalizeLabel(*candidate.qualifier_np);
      for (const auto &[id, c] : draft.ontology.concepts()) {
        if (c.origin == "text" && NormalizeLabel(c.label) == key) concept_id = id;
      }
      if (!concept_id) {
        const std::string id = UniqueId(draft.ontology, Slugify(*candidate.qualifier_np));
        draft.ontology.AddConcept(
            OntoConcept{id, *candidate.qualifier_np, std::nullopt, "text", false, {}});
        concept_id = id;
      }
    }
    if (!concept_id) {
      draft.report.unlinked_qualifiers.push_back(candidate.notice_id + ": " +
                                                 *candidate.qualifier_np + " -> " +
                                                 candidate.proper_name);
      continue;
    }
    if (draft.ontology.AddEdge(OntoEdge{*concept_id, instance_id, OntoEdgeType::kInstanceOf,
                                        TextProvenance(candidate.notice_id)})) {
      ++draft.report.text_links;
    }
  }
  return draft;
}

std::vector<SpatialPair> ComputeSpatialPairsSerial(std::span<const OntoInstance> instances,
                                                   double near_km) {
  const auto keys = PlaceKeys(instances);
  std::vector<SpatialPair> out;
  for (size_t i = 0; i < instances.size(); ++i) PairsForRow(instances, keys, i, near_km, out);
  return out;
}

std::vector<SpatialPair> ComputeSpatialPairs(std::span<const OntoInstance> instances,
                                             double near_km) {
  const auto keys = PlaceKeys(instances);
  std::vector<std::vector<SpatialPair>> rows(instances.size());
  const auto count = static_cast<std::ptrdiff_t>(instances.size());
  // Row i does n - i - 1 comparisons; dynamic scheduling evens this out.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    PairsForRow(instances, keys, static_cast<size_t>(i), near_km, rows[i]);
  }
  std::vector<SpatialPair> out;
  for (auto &row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Ontology DeriveSpatialRelations(Ontology ontology, double near_km) {
  std::vector<OntoInstance> instances;
  instances.reserve(ontology.instances().size());
  for (const auto &[id, instance] : ontology.instances()) instances.push_back(instance);

  const auto pairs = ComputeSpatialPairs(instances, near_km);
  for (const auto &pair : pairs) {
    if (pair.type != OntoEdgeType::kSpatialWithin) continue;
    ontology.AddEdge(
        OntoEdge{pair.src, pair.dst, OntoEdgeType::kSpatialWithin, std::string(kProvGeometry)});
  }
  for (const auto &pair : pairs) {
    if (pair.type != OntoEdgeType::kSpatialNear) continue;
    if (ontology.HasEdgeBetween(pair.src, pair.dst, OntoEdgeType::kSpatialWithin)) continue;
    ontology.AddEdge(
        OntoEdge{pair.src, pair.dst, OntoEdgeType::kSpatialNear, std::string(kProvGeometry)});
  }
  return ontology;
}

OntologyDraft BuildOntology(const TerridocGraph &graph, std::span<const LinkedCandidate> linked,
                            const Gazetteer &gazetteer, const OntologyOptions &options) {
  OntologyDraft draft = ClassifyTerms(graph, gazetteer);
  draft = RetypeEdges(graph, std::move(draft));
  draft = InjectTextLinks(linked, gazetteer, std::move(draft), options.link_policy);
  if (options.spatial_relations) {
    draft.ontology = DeriveSpatialRelations(std::move(draft.ontology), options.near_km);
  }
  return draft;
}

}  // namespace terridoc

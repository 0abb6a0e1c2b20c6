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

#include "terridoc/pipeline.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "terridoc/errors.h"
#include "terridoc/export.h"
#include "terridoc/gazetteer.h"
#include "terridoc/lexicon.h"
#include "terridoc/notice.h"
#include "terridoc/patterns.h"
#include "terridoc/thesaurus.h"

namespace terridoc {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json StringList(const std::vector<std::string> &items) {
  ordered_json out = ordered_json::array();
  for (const auto &item : items) out.push_back(item);
  return out;
}

ordered_json StatsObject(const GraphStats &stats) {
  ordered_json out;
  out["notices"] = stats.notices;
  out["corpus_terms"] = stats.corpus_nodes;
  out["enrichment_terms"] = stats.enrichment_nodes;
  out["head_terms"] = stats.head_nodes;
  out["temporal_terms"] = stats.temporal_nodes;
  out["generic_edges"] = stats.generic_edges;
  out["associated_edges"] = stats.associated_edges;
  out["used_for_edges"] = stats.used_for_edges;
  out["unmatched_corpus_labels"] = StringList(stats.unmatched_labels);
  return out;
}

std::string ReportJson(const TerridocGraph &graph, const OntologyDraft &draft,
                       const Gazetteer &gazetteer) {
  const Ontology &ontology = draft.ontology;
  const BuildReport &report = draft.report;

  std::map<std::string, size_t> by_type;
  std::map<std::string, size_t> by_provenance;
  for (const auto &edge : ontology.edges()) {
    ++by_type[std::string(ToString(edge.type))];
    const auto colon = edge.provenance.find(':');
    ++by_provenance[edge.provenance.substr(0, colon)];
  }

  ordered_json out;
  out["terridoc"] = StatsObject(ComputeGraphStats(graph));

  ordered_json counts;
  counts["concepts"] = ontology.concepts().size();
  counts["instances"] = ontology.instances().size();
  counts["edges"] = ontology.edges().size();
  ordered_json types = ordered_json::object();
  for (const auto &[type, n] : by_type) types[type] = n;
  counts["edges_by_type"] = std::move(types);
  ordered_json provenances = ordered_json::object();
  for (const auto &[prov, n] : by_provenance) provenances[prov] = n;
  counts["edges_by_provenance"] = std::move(provenances);
  counts["text_links"] = report.text_links;
  out["ontology"] = std::move(counts);

  ordered_json reconciliation;
  reconciliation["terridoc_edges"] = graph.edges.size();
  reconciliation["thesaurus_edges"] = by_provenance.contains("thesaurus")
                                          ? by_provenance.at("thesaurus")
                                          : 0;
  reconciliation["dropped_generic"] = report.dropped_generic.size();
  reconciliation["collapsed"] = report.collapsed_edges;
  out["edge_reconciliation"] = std::move(reconciliation);

  ordered_json unmatched = ordered_json::array();
  for (const auto &id : report.unmatched_nodes) {
    unmatched.push_back(graph.nodes.at(id).label);
  }
  out["spatially_unmatched_terms"] = std::move(unmatched);

  ordered_json ambiguous = ordered_json::array();
  for (const auto &id : report.ambiguous_nodes) {
    const std::string &label = graph.nodes.at(id).label;
    ordered_json item;
    item["label"] = label;
    ordered_json candidates = ordered_json::array();
    for (const auto &entry : gazetteer.Resolve(label).entries) {
      candidates.push_back(entry.admin.empty() ? entry.name
                                               : entry.name + " (" + entry.admin + ")");
    }
    item["candidates"] = std::move(candidates);
    ambiguous.push_back(std::move(item));
  }
  out["ambiguous_terms"] = std::move(ambiguous);

  ordered_json dropped = ordered_json::array();
  for (const auto &candidate : report.dropped_candidates) {
    ordered_json item;
    item["name"] = candidate.proper_name;
    item["notice"] = candidate.notice_id;
    item["reason"] = candidate.reason;
    dropped.push_back(std::move(item));
  }
  out["dropped_candidates"] = std::move(dropped);
  out["unlinked_qualifiers"] = StringList(report.unlinked_qualifiers);
  out["dropped_generic_edges"] = StringList(report.dropped_generic);
  out["warnings"] = StringList(report.warnings);
  return out.dump(2) + "\n";
}

}  // namespace

void Validate(const PipelineConfig &config) {
  auto require = [](const std::filesystem::path &path, const char *flag) {
    if (path.empty()) throw ValidationError(std::string("missing required path ") + flag);
  };
  require(config.notices_path, "--notices");
  require(config.thesaurus_path, "--thesaurus");
  require(config.gazetteer_path, "--gazetteer");
  require(config.out_dir, "--out-dir");
  require(config.lexicon_dir, "--lexicon-dir");
  if (!(config.near_km > 0.0)) throw ValidationError("--near-km must be positive");
}

std::string ReadInputFile(const std::filesystem::path &path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw ValidationError("input file not found: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read input file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteOutputFile(const std::filesystem::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

std::string GraphStatsJson(const GraphStats &stats) { return StatsObject(stats).dump(2) + "\n"; }

BuildArtifacts Build(const PipelineConfig &config) {
  Validate(config);
  const auto notices = ParseNotices(ReadInputFile(config.notices_path));
  const Thesaurus thesaurus = LoadThesaurus(ReadInputFile(config.thesaurus_path));
  const Gazetteer gazetteer = LoadGazetteer(ReadInputFile(config.gazetteer_path));
  Lexicon lexicon;
  try {
    lexicon = LoadLexicon(config.lexicon_dir);
  } catch (const IoError &e) {
    throw ValidationError(e.what());
  }

  const TerridocGraph graph = BuildTerridoc(notices, thesaurus);
  const auto candidates = ExtractCandidates(notices, lexicon);
  const auto linked = LinkQualifiers(candidates, graph);

  OntologyOptions options;
  options.spatial_relations = config.spatial_relations;
  options.near_km = config.near_km;
  options.link_policy = config.link_policy;
  const OntologyDraft draft = BuildOntology(graph, linked, gazetteer, options);

  BuildArtifacts artifacts;
  artifacts.graph_json = ExportJson(draft.ontology);
  artifacts.turtle = ExportTurtle(draft.ontology);
  artifacts.dot = ExportDot(draft.ontology);
  artifacts.report = ReportJson(graph, draft, gazetteer);
  return artifacts;
}

BuildArtifacts RunBuild(const PipelineConfig &config) {
  BuildArtifacts artifacts = Build(config);
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw IoError("cannot create " + config.out_dir.string() + ": " + ec.message());
  WriteOutputFile(config.out_dir / "terridoc.json", artifacts.graph_json);
  WriteOutputFile(config.out_dir / "ontology.ttl", artifacts.turtle);
  WriteOutputFile(config.out_dir / "graph.dot", artifacts.dot);
  WriteOutputFile(config.out_dir / "report.json", artifacts.report);
  return artifacts;
}

}  // namespace terridoc

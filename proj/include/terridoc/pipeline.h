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

#ifndef TERRIDOC_PIPELINE_H_
#define TERRIDOC_PIPELINE_H_

#include <filesystem>
#include <string>

#include "terridoc/ontology.h"
#include "terridoc/terridoc_graph.h"

namespace terridoc {

struct PipelineConfig {
  std::filesystem::path notices_path;
  std::filesystem::path thesaurus_path;
  std::filesystem::path gazetteer_path;
  std::filesystem::path out_dir;
  std::filesystem::path lexicon_dir;
  bool spatial_relations = false;
  double near_km = 30.0;
  LinkPolicy link_policy = LinkPolicy::kExisting;
};

// Throws ValidationError when a path is empty or near_km is not positive.
void Validate(const PipelineConfig &config);

// Serialized outputs of one build.
struct BuildArtifacts {
  std::string graph_json;  // terridoc.json
  std::string turtle;      // ontology.ttl
  std::string dot;         // graph.dot
  std::string report;      // report.json
};

// Runs the whole chain in memory: parse notices, build the term graph,
// extract and link text candidates, build the ontology, serialize.
// Throws ParseError / ValidationError for bad inputs (including unreadable
// input files).
BuildArtifacts Build(const PipelineConfig &config);

// Build, then write the four files into config.out_dir. Throws IoError when
// the outputs cannot be written.
BuildArtifacts RunBuild(const PipelineConfig &config);

// Stats JSON of the term graph alone (no gazetteer needed).
std::string GraphStatsJson(const GraphStats &stats);

// Reads a whole input file; a missing or unreadable file is a
// ValidationError.
std::string ReadInputFile(const std::filesystem::path &path);

// Writes a file; throws IoError on failure.
void WriteOutputFile(const std::filesystem::path &path, const std::string &content);

}  // namespace terridoc

#endif  // TERRIDOC_PIPELINE_H_

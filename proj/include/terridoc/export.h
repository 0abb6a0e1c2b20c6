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

#ifndef TERRIDOC_EXPORT_H_
#define TERRIDOC_EXPORT_H_

#include <string>
#include <string_view>

#include "terridoc/ontology.h"

namespace terridoc {

inline constexpr std::string_view kNamespaceIri = "http://example.org/terridoc#";

// Canonical JSON graph document: nodes sorted by id, edges by (src, dst,
// type), 2-space indent, LF, trailing newline. Instances carry their
// gazetteer entry under "entry".
std::string ExportJson(const Ontology &ontology);

// Inverse of ExportJson. Throws ParseError for malformed JSON and
// ValidationError (naming the JSON path) for schema or invariant violations.
Ontology ImportJson(std::string_view text);

// Turtle with trd:, rdf:, rdfs: and skos: prefixes; subjects sorted.
std::string ExportTurtle(const Ontology &ontology);

// GraphViz digraph: boxes for concepts, ellipses for instances, dashed
// boxes for temporal concepts; edges labeled by type.
std::string ExportDot(const Ontology &ontology);

}  // namespace terridoc

#endif  // TERRIDOC_EXPORT_H_

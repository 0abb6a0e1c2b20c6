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

#include <map>
#include <string>

#include "terridoc/export.h"

namespace terridoc {
namespace {

std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string ExportDot(const Ontology &ontology) {
  std::map<std::string, std::string> statements;
  for (const auto &[id, c] : ontology.concepts()) {
    statements[id] = Quote(id) + " [label=" + Quote(c.label) + ", shape=box" +
                     (c.temporal ? ", style=dashed" : "") + "];";
  }
  for (const auto &[id, i] : ontology.instances()) {
    statements[id] = Quote(id) + " [label=" + Quote(i.label) + ", shape=ellipse];";
  }

  std::string out = "digraph terridoc {\n";
  for (const auto &[id, statement] : statements) out += "  " + statement + "\n";
  for (const auto &edge : ontology.edges()) {
    out += "  " + Quote(edge.src) + " -> " + Quote(edge.dst) + " [label=" +
           Quote(ToString(edge.type)) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace terridoc

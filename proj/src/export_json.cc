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
#include <set>
#include <utility>

#include "json.hpp"
#include "terridoc/errors.h"
#include "terridoc/export.h"

namespace terridoc {
namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

ordered_json DocsArray(const std::set<std::string> &docs) {
  ordered_json out = ordered_json::array();
  for (const auto &doc : docs) out.push_back(doc);
  return out;
}

ordered_json ConceptNode(const OntoConcept &c) {
  ordered_json node;
  node["id"] = c.id;
  node["label"] = c.label;
  node["kind"] = c.temporal ? "temporal" : "concept";
  node["origin"] = c.origin;
  if (c.note) node["note"] = *c.note;
  node["docs"] = DocsArray(c.docs);
  return node;
}

ordered_json InstanceNode(const OntoInstance &i) {
  ordered_json node;
  node["id"] = i.id;
  node["label"] = i.label;
  node["kind"] = "instance";
  node["origin"] = i.origin;
  node["docs"] = DocsArray(i.docs);
  ordered_json entry;
  entry["name"] = i.entry.name;
  entry["admin"] = i.entry.admin;
  entry["class"] = std::string(ToString(i.entry.feature_class));
  entry["lon"] = i.entry.lon;
  entry["lat"] = i.entry.lat;
  node["entry"] = std::move(entry);
  return node;
}

// Typed accessors that report the JSON path of the offending value.
class Reader {
 public:
  static const json &Field(const json &object, const std::string &path, const char *key) {
    const auto it = object.find(key);
    if (it == object.end()) throw ValidationError(path + "." + key + ": missing");
    return *it;
  }
  static std::string String(const json &object, const std::string &path, const char *key) {
    const json &value = Field(object, path, key);
    if (!value.is_string()) throw ValidationError(path + "." + key + ": expected string");
    return value.get<std::string>();
  }
  static double Number(const json &object, const std::string &path, const char *key) {
    const json &value = Field(object, path, key);
    if (!value.is_number()) throw ValidationError(path + "." + key + ": expected number");
    return value.get<double>();
  }
  static std::set<std::string> Docs(const json &object, const std::string &path) {
    const json &value = Field(object, path, "docs");
    if (!value.is_array()) throw ValidationError(path + ".docs: expected array");
    std::set<std::string> docs;
    for (size_t i = 0; i < value.size(); ++i) {
      if (!value[i].is_string()) {
        throw ValidationError(path + ".docs[" + std::to_string(i) + "]: expected string");
      }
      if (!docs.insert(value[i].get<std::string>()).second) {
        throw ValidationError(path + ".docs[" + std::to_string(i) + "]: duplicate document");
      }
    }
    return docs;
  }
};

}  // namespace

std::string ExportJson(const Ontology &ontology) {
  // Concepts and instances share one id space; merge them in id order.
  std::map<std::string, ordered_json> nodes;
  for (const auto &[id, c] : ontology.concepts()) nodes.emplace(id, ConceptNode(c));
  for (const auto &[id, i] : ontology.instances()) nodes.emplace(id, InstanceNode(i));

  ordered_json document;
  document["nodes"] = ordered_json::array();
  for (auto &[id, node] : nodes) document["nodes"].push_back(std::move(node));
  document["edges"] = ordered_json::array();
  for (const auto &edge : ontology.edges()) {
    ordered_json out;
    out["src"] = edge.src;
    out["dst"] = edge.dst;
    out["type"] = std::string(ToString(edge.type));
    out["prov"] = edge.provenance;
    document["edges"].push_back(std::move(out));
  }
  return document.dump(2) + "\n";
}

Ontology ImportJson(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON graph: ") + e.what());
  }
  if (!document.is_object()) throw ValidationError("$: expected object");
  const json &nodes = Reader::Field(document, "$", "nodes");
  const json &edges = Reader::Field(document, "$", "edges");
  if (!nodes.is_array()) throw ValidationError("$.nodes: expected array");
  if (!edges.is_array()) throw ValidationError("$.edges: expected array");

  Ontology ontology;
  for (size_t n = 0; n < nodes.size(); ++n) {
    const std::string path = "$.nodes[" + std::to_string(n) + "]";
    const json &node = nodes[n];
    if (!node.is_object()) throw ValidationError(path + ": expected object");
    const std::string id = Reader::String(node, path, "id");
    if (id.empty()) throw ValidationError(path + ".id: empty");
    const std::string kind = Reader::String(node, path, "kind");
    bool added = false;
    if (kind == "concept" || kind == "temporal") {
      OntoConcept c;
      c.id = id;
      c.label = Reader::String(node, path, "label");
      c.origin = Reader::String(node, path, "origin");
      c.temporal = kind == "temporal";
      if (node.contains("note")) c.note = Reader::String(node, path, "note");
      c.docs = Reader::Docs(node, path);
      added = ontology.AddConcept(std::move(c));
    } else if (kind == "instance") {
      OntoInstance i;
      i.id = id;
      i.label = Reader::String(node, path, "label");
      i.origin = Reader::String(node, path, "origin");
      i.docs = Reader::Docs(node, path);
      const json &entry = Reader::Field(node, path, "entry");
      const std::string entry_path = path + ".entry";
      if (!entry.is_object()) throw ValidationError(entry_path + ": expected object");
      i.entry.name = Reader::String(entry, entry_path, "name");
      i.entry.admin = Reader::String(entry, entry_path, "admin");
      const std::string feature_class = Reader::String(entry, entry_path, "class");
      const auto parsed = ParseFeatureClass(feature_class);
      if (!parsed) {
        throw ValidationError(entry_path + ".class: unknown feature class '" + feature_class + "'");
      }
      i.entry.feature_class = *parsed;
      i.entry.lon = Reader::Number(entry, entry_path, "lon");
      i.entry.lat = Reader::Number(entry, entry_path, "lat");
      if (i.entry.lon < -180 || i.entry.lon > 180 || i.entry.lat < -90 || i.entry.lat > 90) {
        throw ValidationError(entry_path + ": coordinate out of range");
      }
      added = ontology.AddInstance(std::move(i));
    } else {
      throw ValidationError(path + ".kind: unknown kind '" + kind + "'");
    }
    if (!added) throw ValidationError(path + ".id: duplicate id '" + id + "'");
  }

  for (size_t e = 0; e < edges.size(); ++e) {
    const std::string path = "$.edges[" + std::to_string(e) + "]";
    const json &edge = edges[e];
    if (!edge.is_object()) throw ValidationError(path + ": expected object");
    OntoEdge out;
    out.src = Reader::String(edge, path, "src");
    out.dst = Reader::String(edge, path, "dst");
    const std::string type = Reader::String(edge, path, "type");
    const auto parsed = ParseOntoEdgeType(type);
    if (!parsed) throw ValidationError(path + ".type: unknown edge type '" + type + "'");
    out.type = *parsed;
    out.provenance = Reader::String(edge, path, "prov");
    if (!ontology.Contains(out.src)) {
      throw ValidationError(path + ".src: unknown node '" + out.src + "'");
    }
    if (!ontology.Contains(out.dst)) {
      throw ValidationError(path + ".dst: unknown node '" + out.dst + "'");
    }
    if (!ontology.AddEdge(std::move(out))) throw ValidationError(path + ": duplicate edge");
  }

  if (const auto problems = CheckOntology(ontology); !problems.empty()) {
    throw ValidationError("$: " + problems.front());
  }
  return ontology;
}

}  // namespace terridoc

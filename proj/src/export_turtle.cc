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

#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "terridoc/export.h"

namespace terridoc {
namespace {

std::string Escape(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

std::string Literal(std::string_view text) { return "\"" + Escape(text) + "\""; }
std::string FrLiteral(std::string_view text) { return Literal(text) + "@fr"; }
std::string Name(std::string_view id) { return "trd:" + std::string(id); }

// xsd:decimal lexical form: always has a '.', never an exponent.
std::string Decimal(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string text(buf, end);
  if (text.find_first_of("eE") != std::string::npos) {
    std::snprintf(buf, sizeof buf, "%.12f", value);
    text = buf;
    while (text.size() > 1 && text.back() == '0' && text[text.size() - 2] != '.') text.pop_back();
  }
  if (text.find('.') == std::string::npos) text += ".0";
  return text;
}

// Predicates in output order.
enum Predicate {
  kType,
  kPrefLabel,
  kLabel,
  kAltLabel,
  kNote,
  kBroader,
  kRelated,
  kInstanceOf,
  kWithin,
  kNear,
  kTemporal,
  kName,
  kAdmin,
  kFeatureClass,
  kLon,
  kLat,
};

constexpr const char *kPredicateNames[] = {
    "a",           "skos:prefLabel",   "rdfs:label", "skos:altLabel",    "skos:note",
    "skos:broader", "skos:related",    "trd:instance_of", "trd:within", "trd:near",
    "trd:temporal", "trd:gazetteerName", "trd:admin", "trd:featureClass", "trd:lon",
    "trd:lat",
};

using Subject = std::map<Predicate, std::set<std::string>>;

}  // namespace

std::string ExportTurtle(const Ontology &ontology) {
  std::map<std::string, Subject> subjects;

  if (!ontology.instances().empty()) {
    Subject &cls = subjects["trd:EntiteSpatiale"];
    cls[kType].insert("rdfs:Class");
    cls[kLabel].insert(FrLiteral(kRootConceptLabel));
  }
  for (const auto &[id, c] : ontology.concepts()) {
    Subject &s = subjects[Name(id)];
    s[kType].insert("skos:Concept");
    s[kPrefLabel].insert(FrLiteral(c.label));
    if (c.note) s[kNote].insert(FrLiteral(*c.note));
    if (c.temporal) s[kTemporal].insert("true");
  }
  for (const auto &[id, i] : ontology.instances()) {
    Subject &s = subjects[Name(id)];
    s[kLabel].insert(FrLiteral(i.label));
    s[kName].insert(Literal(i.entry.name));
    if (!i.entry.admin.empty()) s[kAdmin].insert(Literal(i.entry.admin));
    s[kFeatureClass].insert(Literal(ToString(i.entry.feature_class)));
    s[kLon].insert(Decimal(i.entry.lon));
    s[kLat].insert(Decimal(i.entry.lat));
  }

  for (const auto &edge : ontology.edges()) {
    Subject &s = subjects[Name(edge.src)];
    switch (edge.type) {
      case OntoEdgeType::kSubclassGeneric:
        s[kBroader].insert(Name(edge.dst));
        break;
      case OntoEdgeType::kAssociated:
        s[kRelated].insert(Name(edge.dst));
        break;
      case OntoEdgeType::kUsedFor: {
        std::string label = edge.dst;
        if (const auto *c = ontology.FindConcept(edge.dst)) label = c->label;
        if (const auto *i = ontology.FindInstance(edge.dst)) label = i->label;
        s[kAltLabel].insert(FrLiteral(label));
        break;
      }
      case OntoEdgeType::kInstanceOf:
        if (edge.provenance == kProvGazetteer) {
          s[kType].insert("trd:EntiteSpatiale");
        } else {
          s[kInstanceOf].insert(Name(edge.dst));
        }
        break;
      case OntoEdgeType::kSpatialWithin:
        s[kWithin].insert(Name(edge.dst));
        break;
      case OntoEdgeType::kSpatialNear:
        s[kNear].insert(Name(edge.dst));
        break;
    }
  }

  std::string out;
  out += "@prefix trd: <" + std::string(kNamespaceIri) + "> .\n";
  out += "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n";
  out += "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n";
  out += "@prefix skos: <http://www.w3.org/2004/02/skos/core#> .\n";
  for (const auto &[subject, predicates] : subjects) {
    out += "\n" + subject;
    bool first = true;
    for (const auto &[predicate, objects] : predicates) {
      out += first ? " " : " ;\n    ";
      first = false;
      out += kPredicateNames[predicate];
      bool first_object = true;
      for (const auto &object : objects) {
        out += first_object ? " " : ", ";
        first_object = false;
        out += object;
      }
    }
    out += " .\n";
  }
  return out;
}

}  // namespace terridoc

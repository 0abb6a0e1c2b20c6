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

#include "terridoc/thesaurus.h"

#include <algorithm>
#include <utility>

#include "json.hpp"
#include "terridoc/errors.h"
#include "terridoc/text.h"

namespace terridoc {
namespace {

using nlohmann::json;

std::vector<std::string> StringArray(const json &object, const char *key, int line) {
  std::vector<std::string> out;
  const auto it = object.find(key);
  if (it == object.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw ParseError(std::string("'") + key + "' must be an array of strings", line);
  }
  for (const auto &item : *it) {
    if (!item.is_string()) {
      throw ParseError(std::string("'") + key + "' must be an array of strings", line);
    }
    out.push_back(ToNfc(item.get<std::string>()));
  }
  return out;
}

std::string RequiredString(const json &object, const char *key, int line) {
  const auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    throw ParseError(std::string("missing string field '") + key + "'", line);
  }
  std::string value = Trim(ToNfc(it->get<std::string>()));
  if (value.empty()) throw ParseError(std::string("empty field '") + key + "'", line);
  return value;
}

// Depth-first search for a generic cycle; returns the cycle as a path of ids
// whose first and last element coincide, or empty if the relation is acyclic.
std::vector<std::string> FindGenericCycle(const std::map<std::string, ThesaurusRecord> &records) {
  enum class Mark { kWhite, kGrey, kBlack };
  std::map<std::string, Mark> marks;
  for (const auto &[id, record] : records) marks[id] = Mark::kWhite;

  std::vector<std::string> stack;
  std::vector<std::string> cycle;
  auto visit = [&](auto &&self, const std::string &id) -> bool {
    marks[id] = Mark::kGrey;
    stack.push_back(id);
    for (const auto &parent : records.at(id).generic) {
      if (marks[parent] == Mark::kGrey) {
        auto from = std::find(stack.begin(), stack.end(), parent);
        cycle.assign(from, stack.end());
        cycle.push_back(parent);
        return true;
      }
      if (marks[parent] == Mark::kWhite && self(self, parent)) return true;
    }
    stack.pop_back();
    marks[id] = Mark::kBlack;
    return false;
  };
  for (const auto &[id, record] : records) {
    if (marks[id] == Mark::kWhite && visit(visit, id)) return cycle;
  }
  return {};
}

}  // namespace

Thesaurus::Thesaurus(std::vector<ThesaurusRecord> records) {
  for (auto &record : records) {
    const std::string id = record.id;
    if (!records_.emplace(id, std::move(record)).second) {
      throw ValidationError("duplicate thesaurus record id '" + id + "'");
    }
  }

  for (const auto &[id, record] : records_) {
    auto check = [&](const std::vector<std::string> &refs, const char *relation) {
      for (const auto &ref : refs) {
        if (ref == id) {
          throw ValidationError("record '" + id + "' lists itself in " + relation);
        }
        if (!records_.contains(ref)) {
          throw ValidationError("record '" + id + "' has dangling " + relation + " reference '" +
                                ref + "'");
        }
      }
    };
    check(record.generic, "tg");
    check(record.associated, "ta");
  }

  if (auto cycle = FindGenericCycle(records_); !cycle.empty()) {
    std::string path;
    for (const auto &id : cycle) path += (path.empty() ? "" : " -> ") + id;
    throw ValidationError("generic relation has a cycle: " + path);
  }

  for (const auto &[id, record] : records_) {
    auto index = [&](const std::string &label) {
      const std::string key = NormalizeLabel(label);
      auto [it, inserted] = label_index_.emplace(key, id);
      if (!inserted && it->second != id) {
        throw ValidationError("label '" + label + "' is shared by records '" + it->second +
                              "' and '" + id + "'");
      }
    };
    index(record.pref_label);
    for (const auto &alt : record.used_for) index(alt);
  }
}

const ThesaurusRecord *Thesaurus::Find(std::string_view id) const {
  const auto it = records_.find(std::string(id));
  return it == records_.end() ? nullptr : &it->second;
}

std::optional<std::string> Thesaurus::Lookup(std::string_view label) const {
  const auto it = label_index_.find(NormalizeLabel(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

Thesaurus LoadThesaurus(std::string_view content) {
  std::vector<ThesaurusRecord> records;
  int line_number = 0;
  size_t start = 0;
  while (start <= content.size()) {
    const size_t end = content.find('\n', start);
    const std::string_view line =
        content.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_number;
    start = end == std::string_view::npos ? content.size() + 1 : end + 1;
    if (Trim(line).empty()) continue;

    json object;
    try {
      object = json::parse(line);
    } catch (const json::parse_error &e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_number);
    }
    if (!object.is_object()) throw ParseError("record must be a JSON object", line_number);

    ThesaurusRecord record;
    record.id = RequiredString(object, "id", line_number);
    record.pref_label = RequiredString(object, "pref", line_number);
    record.used_for = StringArray(object, "uf", line_number);
    record.generic = StringArray(object, "tg", line_number);
    record.associated = StringArray(object, "ta", line_number);
    if (auto it = object.find("note"); it != object.end() && !it->is_null()) {
      if (!it->is_string()) throw ParseError("'note' must be a string", line_number);
      record.note = ToNfc(it->get<std::string>());
    }
    records.push_back(std::move(record));
  }
  return Thesaurus(std::move(records));
}

}  // namespace terridoc

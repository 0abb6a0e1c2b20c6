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

#ifndef TERRIDOC_THESAURUS_H_
#define TERRIDOC_THESAURUS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace terridoc {

// An authority record. `generic` holds broader record ids (TG), `associated`
// related record ids (TA), `used_for` non-preferred labels (EP/UF).
struct ThesaurusRecord {
  std::string id;
  std::string pref_label;
  std::vector<std::string> used_for;
  std::vector<std::string> generic;
  std::vector<std::string> associated;
  std::optional<std::string> note;

  bool operator==(const ThesaurusRecord &) const = default;
};

// Immutable after construction; safe for concurrent readers.
class Thesaurus {
 public:
  Thesaurus() = default;

  // Validates referential closure, self links, generic acyclicity and label
  // uniqueness, then builds the label index. Throws ValidationError.
  explicit Thesaurus(std::vector<ThesaurusRecord> records);

  const std::map<std::string, ThesaurusRecord> &records() const { return records_; }
  const std::map<std::string, std::string> &label_index() const { return label_index_; }

  const ThesaurusRecord *Find(std::string_view id) const;

  // Record id for a preferred or used-for label, compared after
  // NormalizeLabel. A used-for label yields its canonical record.
  std::optional<std::string> Lookup(std::string_view label) const;

  bool operator==(const Thesaurus &) const = default;

 private:
  std::map<std::string, ThesaurusRecord> records_;
  std::map<std::string, std::string> label_index_;
};

// Parses the JSON Lines thesaurus format: keys id, pref (required), uf, tg,
// ta (string arrays), note. Blank lines are skipped, unknown keys ignored.
Thesaurus LoadThesaurus(std::string_view content);

inline std::optional<std::string> Lookup(std::string_view label, const Thesaurus &thesaurus) {
  return thesaurus.Lookup(label);
}

}  // namespace terridoc

#endif  // TERRIDOC_THESAURUS_H_

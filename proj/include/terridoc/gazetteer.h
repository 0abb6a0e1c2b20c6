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

#ifndef TERRIDOC_GAZETTEER_H_
#define TERRIDOC_GAZETTEER_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace terridoc {

enum class FeatureClass { kCommune, kLieuDit, kRoute, kPic, kVallee, kRegion, kAutre };

std::string_view ToString(FeatureClass feature_class);
std::optional<FeatureClass> ParseFeatureClass(std::string_view text);

struct GazetteerEntry {
  std::string name;
  std::string admin;  // may be empty
  FeatureClass feature_class = FeatureClass::kAutre;
  double lon = 0.0;
  double lat = 0.0;

  auto operator<=>(const GazetteerEntry &) const = default;
};

// A term label split into its base and an optional trailing parenthesized
// qualifier: "Barèges (Hautes-Pyrénées)" -> {"Barèges", "Hautes-Pyrénées"}.
struct LabelParts {
  std::string base;
  std::optional<std::string> qualifier;

  bool operator==(const LabelParts &) const = default;
};

// Throws ValidationError on unbalanced or nested parentheses, or an empty base.
LabelParts ParseLabelQualifier(std::string_view label);

enum class MatchStatus { kMatched, kAmbiguous, kUnmatched };

std::string_view ToString(MatchStatus status);

struct SpatialMatch {
  MatchStatus status = MatchStatus::kUnmatched;
  std::vector<GazetteerEntry> entries;  // 1 if matched, >= 2 if ambiguous
};

// Point gazetteer indexed by normalized name. Immutable after load.
class Gazetteer {
 public:
  Gazetteer() = default;
  explicit Gazetteer(std::vector<GazetteerEntry> entries,
                     std::set<std::string> country_qualifiers = {"France"});

  const std::vector<GazetteerEntry> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  // Entries whose normalized name equals NormalizeLabel(name), in file order.
  std::vector<GazetteerEntry> Candidates(std::string_view name) const;

  // Number of entries sharing this normalized name.
  size_t NameCount(std::string_view name) const;

  // Candidates for the label's base, narrowed by its qualifier when present.
  // A qualifier keeps an entry if it equals the admin, or if the admin is
  // empty and the qualifier is an allowed country-level name.
  SpatialMatch Resolve(std::string_view label) const;

 private:
  std::vector<GazetteerEntry> entries_;
  std::map<std::string, std::vector<size_t>> by_name_;
  std::set<std::string> country_qualifiers_;  // normalized
};

// Parses the gazetteer CSV (header name,admin,class,lon,lat; RFC 4180
// quoting). Throws ParseError for a missing header or broken quoting and
// ValidationError (with row number) for bad coordinates or classes.
Gazetteer LoadGazetteer(std::string_view content,
                        std::set<std::string> country_qualifiers = {"France"});

inline SpatialMatch Resolve(std::string_view label, const Gazetteer &gazetteer) {
  return gazetteer.Resolve(label);
}

// Great-circle distance on a sphere of radius 6371 km.
double HaversineKm(double lon1, double lat1, double lon2, double lat2);

}  // namespace terridoc

#endif  // TERRIDOC_GAZETTEER_H_

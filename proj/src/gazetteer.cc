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

#include "terridoc/gazetteer.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

#include "terridoc/errors.h"
#include "terridoc/text.h"

namespace terridoc {
namespace {

constexpr double kEarthRadiusKm = 6371.0;

struct CsvRow {
  int line = 0;
  std::vector<std::string> fields;
};

// RFC 4180 reader; accepts LF or CRLF and quoted fields spanning lines.
std::vector<CsvRow> ReadCsv(std::string_view content) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  int line = 1;
  row.line = 1;
  bool quoted = false;
  bool field_started = false;
  size_t i = 0;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    const bool blank = row.fields.size() == 1 && row.fields[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row = CsvRow{};
    row.line = line;
  };

  while (i < content.size()) {
    const char c = content[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        if (i < content.size() && content[i] != ',' && content[i] != '\n' && content[i] != '\r') {
          throw ParseError("unexpected character after closing quote", line);
        }
        continue;
      }
      if (c == '\n') ++line;
      field.push_back(c);
      ++i;
      continue;
    }
    switch (c) {
      case '"':
        if (field_started || !field.empty()) throw ParseError("quote inside unquoted field", line);
        quoted = true;
        field_started = true;
        ++i;
        break;
      case ',':
        end_field();
        ++i;
        break;
      case '\r':
        ++i;
        if (i < content.size() && content[i] == '\n') ++i;
        ++line;
        end_row();
        break;
      case '\n':
        ++i;
        ++line;
        end_row();
        break;
      default:
        field.push_back(c);
        ++i;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line);
  if (field_started || !field.empty() || !row.fields.empty()) end_row();
  return rows;
}

double ParseCoordinate(const std::string &text, const char *what, int row, int line) {
  const std::string trimmed = Trim(text);
  double value = 0.0;
  const char *begin = trimmed.data();
  const char *end = begin + trimmed.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (trimmed.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ValidationError("gazetteer row " + std::to_string(row) + " (line " +
                          std::to_string(line) + "): bad " + what + " '" + text + "'");
  }
  return value;
}

}  // namespace

std::string_view ToString(FeatureClass feature_class) {
  switch (feature_class) {
    case FeatureClass::kCommune:
      return "commune";
    case FeatureClass::kLieuDit:
      return "lieu-dit";
    case FeatureClass::kRoute:
      return "route";
    case FeatureClass::kPic:
      return "pic";
    case FeatureClass::kVallee:
      return "vallée";
    case FeatureClass::kRegion:
      return "région";
    case FeatureClass::kAutre:
      return "autre";
  }
  return "autre";
}

std::optional<FeatureClass> ParseFeatureClass(std::string_view text) {
  static const std::pair<std::string_view, FeatureClass> kClasses[] = {
      {"commune", FeatureClass::kCommune}, {"lieu-dit", FeatureClass::kLieuDit},
      {"route", FeatureClass::kRoute},     {"pic", FeatureClass::kPic},
      {"vallée", FeatureClass::kVallee},   {"région", FeatureClass::kRegion},
      {"autre", FeatureClass::kAutre},
  };
  const std::string key = NormalizeLabel(text);
  for (const auto &[name, value] : kClasses) {
    if (key == name) return value;
  }
  return std::nullopt;
}

std::string_view ToString(MatchStatus status) {
  switch (status) {
    case MatchStatus::kMatched:
      return "matched";
    case MatchStatus::kAmbiguous:
      return "ambiguous";
    case MatchStatus::kUnmatched:
      return "unmatched";
  }
  return "unmatched";
}

LabelParts ParseLabelQualifier(std::string_view label) {
  const std::string text = Trim(label);
  int depth = 0;
  size_t last_open = std::string::npos;
  size_t last_close = std::string::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      if (depth > 0) {
        throw ValidationError("nested parentheses in label '" + text + "'");
      }
      ++depth;
      last_open = i;
    } else if (text[i] == ')') {
      if (depth == 0) throw ValidationError("unbalanced ')' in label '" + text + "'");
      --depth;
      last_close = i;
    }
  }
  if (depth != 0) throw ValidationError("unbalanced '(' in label '" + text + "'");

  LabelParts parts;
  if (last_close != std::string::npos && last_close + 1 == text.size()) {
    parts.base = Trim(std::string_view(text).substr(0, last_open));
    parts.qualifier = Trim(std::string_view(text).substr(last_open + 1, last_close - last_open - 1));
    if (parts.qualifier->empty()) parts.qualifier.reset();
  } else {
    parts.base = text;
  }
  if (parts.base.empty()) throw ValidationError("label '" + text + "' has an empty base");
  return parts;
}

Gazetteer::Gazetteer(std::vector<GazetteerEntry> entries, std::set<std::string> country_qualifiers)
    : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    by_name_[NormalizeLabel(entries_[i].name)].push_back(i);
  }
  for (const auto &country : country_qualifiers) country_qualifiers_.insert(NormalizeLabel(country));
}

std::vector<GazetteerEntry> Gazetteer::Candidates(std::string_view name) const {
  std::vector<GazetteerEntry> out;
  const auto it = by_name_.find(NormalizeLabel(name));
  if (it == by_name_.end()) return out;
  for (size_t index : it->second) out.push_back(entries_[index]);
  return out;
}

size_t Gazetteer::NameCount(std::string_view name) const {
  const auto it = by_name_.find(NormalizeLabel(name));
  return it == by_name_.end() ? 0 : it->second.size();
}

SpatialMatch Gazetteer::Resolve(std::string_view label) const {
  LabelParts parts;
  try {
    parts = ParseLabelQualifier(label);
  } catch (const ValidationError &) {
    return {};
  }

  std::vector<GazetteerEntry> candidates = Candidates(parts.base);
  if (parts.qualifier) {
    const std::string qualifier = NormalizeLabel(*parts.qualifier);
    const bool country = country_qualifiers_.contains(qualifier);
    std::erase_if(candidates, [&](const GazetteerEntry &entry) {
      const std::string admin = NormalizeLabel(entry.admin);
      return !(admin == qualifier || (admin.empty() && country));
    });
  }

  SpatialMatch match;
  if (candidates.size() == 1) {
    match.status = MatchStatus::kMatched;
  } else if (candidates.size() >= 2) {
    match.status = MatchStatus::kAmbiguous;
  }
  match.entries = std::move(candidates);
  return match;
}

Gazetteer LoadGazetteer(std::string_view content, std::set<std::string> country_qualifiers) {
  if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
  const std::vector<CsvRow> rows = ReadCsv(content);
  static const std::vector<std::string> kHeader = {"name", "admin", "class", "lon", "lat"};
  if (rows.empty()) throw ParseError("missing gazetteer header name,admin,class,lon,lat", 1);
  std::vector<std::string> header;
  for (const auto &field : rows.front().fields) header.push_back(Trim(field));
  if (header != kHeader) {
    throw ParseError("gazetteer header must be name,admin,class,lon,lat", rows.front().line);
  }

  std::vector<GazetteerEntry> entries;
  for (size_t r = 1; r < rows.size(); ++r) {
    const CsvRow &row = rows[r];
    const int row_number = static_cast<int>(r);
    const std::string where =
        "gazetteer row " + std::to_string(row_number) + " (line " + std::to_string(row.line) + ")";
    if (row.fields.size() != kHeader.size()) {
      throw ValidationError(where + ": expected 5 fields, found " +
                            std::to_string(row.fields.size()));
    }
    GazetteerEntry entry;
    entry.name = Trim(ToNfc(row.fields[0]));
    entry.admin = Trim(ToNfc(row.fields[1]));
    if (entry.name.empty()) throw ValidationError(where + ": empty name");
    const auto feature_class = ParseFeatureClass(row.fields[2]);
    if (!feature_class) {
      throw ValidationError(where + ": unknown feature class '" + row.fields[2] + "'");
    }
    entry.feature_class = *feature_class;
    entry.lon = ParseCoordinate(row.fields[3], "longitude", row_number, row.line);
    entry.lat = ParseCoordinate(row.fields[4], "latitude", row_number, row.line);
    if (entry.lon < -180.0 || entry.lon > 180.0) {
      throw ValidationError(where + ": longitude out of range");
    }
    if (entry.lat < -90.0 || entry.lat > 90.0) {
      throw ValidationError(where + ": latitude out of range");
    }
    entries.push_back(std::move(entry));
  }
  return Gazetteer(std::move(entries), std::move(country_qualifiers));
}

double HaversineKm(double lon1, double lat1, double lon2, double lat2) {
  constexpr double kRad = std::numbers::pi / 180.0;
  const double dlat = (lat2 - lat1) * kRad;
  const double dlon = (lon2 - lon1) * kRad;
  const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1 * kRad) * std::cos(lat2 * kRad) * std::sin(dlon / 2) *
                       std::sin(dlon / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

}  // namespace terridoc

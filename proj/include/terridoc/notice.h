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

#ifndef TERRIDOC_NOTICE_H_
#define TERRIDOC_NOTICE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace terridoc {

// One subject heading (vedette-matière): an ordered run of authority terms.
// Index 0 is the head. Always holds at least one term, none containing "--".
class SubjectHeading {
 public:
  explicit SubjectHeading(std::vector<std::string> terms);

  const std::vector<std::string> &terms() const { return terms_; }
  const std::string &head() const { return terms_.front(); }

  bool operator==(const SubjectHeading &) const = default;

 private:
  std::vector<std::string> terms_;
};

struct Notice {
  std::string id;
  std::vector<SubjectHeading> headings;
  std::optional<std::string> title;
  std::optional<std::string> legend;

  bool operator==(const Notice &) const = default;
};

// Splits a raw DEE string on the ASCII token "--". White space around each
// separator is absorbed and each piece trimmed; en/em dashes do not split.
// Throws ValidationError if any piece is empty.
SubjectHeading SplitHeading(std::string_view raw);

const std::string &HeadTerm(const SubjectHeading &heading);

// Parses a <NOTICES> document. Character data is NFC-normalized with white
// space runs collapsed. Unknown elements inside NOTICE are skipped.
// Throws ParseError (with line) on malformed markup and ValidationError on a
// missing or duplicate id.
std::vector<Notice> ParseNotices(std::string_view content);

}  // namespace terridoc

#endif  // TERRIDOC_NOTICE_H_

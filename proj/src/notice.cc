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

#include "terridoc/notice.h"

#include <memory>
#include <set>
#include <string>
#include <utility>

#include <expat.h>

#include "terridoc/errors.h"
#include "terridoc/text.h"

namespace terridoc {
namespace {

constexpr std::string_view kSeparator = "--";

// Collapses every run of Unicode white space to one ASCII space and trims.
std::string CollapseWhitespace(std::string_view utf8) {
  const std::string trimmed = Trim(utf8);
  std::u32string text = DecodeUtf8(trimmed);
  std::u32string out;
  out.reserve(text.size());
  bool in_space = false;
  for (char32_t c : text) {
    const bool space = c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' ||
                       c == U' ' || c == U' ' || c == U' ';
    if (space) {
      if (!in_space) out.push_back(U' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  return EncodeUtf8(out);
}

class NoticeReader {
 public:
  NoticeReader() : parser_(XML_ParserCreate("UTF-8")) {
    if (parser_ == nullptr) throw std::bad_alloc();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &NoticeReader::OnStart, &NoticeReader::OnEnd);
    XML_SetCharacterDataHandler(parser_, &NoticeReader::OnText);
  }
  ~NoticeReader() { XML_ParserFree(parser_); }
  NoticeReader(const NoticeReader &) = delete;
  NoticeReader &operator=(const NoticeReader &) = delete;

  std::vector<Notice> Read(std::string_view content) {
    const auto status = XML_Parse(parser_, content.data(), static_cast<int>(content.size()),
                                  /*isFinal=*/1);
    if (pending_error_) std::rethrow_exception(pending_error_);
    if (status != XML_STATUS_OK) {
      throw ParseError(XML_ErrorString(XML_GetErrorCode(parser_)),
                       static_cast<int>(XML_GetCurrentLineNumber(parser_)));
    }
    if (!saw_root_) throw ParseError("missing <NOTICES> root element");
    return std::move(notices_);
  }

 private:
  enum class Field { kNone, kDee, kTitre, kLegende };

  static void OnStart(void *data, const XML_Char *name, const XML_Char **attrs) {
    static_cast<NoticeReader *>(data)->Guard([&](NoticeReader &self) {
      self.Start(name, attrs);
    });
  }
  static void OnEnd(void *data, const XML_Char *name) {
    static_cast<NoticeReader *>(data)->Guard([&](NoticeReader &self) { self.End(name); });
  }
  static void OnText(void *data, const XML_Char *text, int len) {
    auto *self = static_cast<NoticeReader *>(data);
    if (self->field_ != Field::kNone && self->skip_depth_ == 0) self->buffer_.append(text, len);
  }

  // Exceptions must not cross the C parser; park them and stop parsing.
  template <typename Fn>
  void Guard(Fn &&fn) {
    if (pending_error_) return;
    try {
      fn(*this);
    } catch (...) {
      pending_error_ = std::current_exception();
      XML_StopParser(parser_, XML_FALSE);
    }
  }

  int Line() const { return static_cast<int>(XML_GetCurrentLineNumber(parser_)); }

  void Start(std::string_view name, const XML_Char **attrs) {
    ++depth_;
    if (skip_depth_ > 0) {
      ++skip_depth_;
      return;
    }
    if (depth_ == 1) {
      if (name != "NOTICES") {
        throw ParseError("root element must be <NOTICES>, found <" + std::string(name) + ">",
                         Line());
      }
      saw_root_ = true;
      return;
    }
    if (depth_ == 2) {
      if (name != "NOTICE") {
        throw ParseError("unexpected <" + std::string(name) + "> under <NOTICES>", Line());
      }
      current_ = Notice{};
      bool has_id = false;
      for (int i = 0; attrs[i] != nullptr; i += 2) {
        if (std::string_view(attrs[i]) == "id") {
          current_.id = Trim(attrs[i + 1]);
          has_id = true;
        }
      }
      if (!has_id || current_.id.empty()) {
        throw ValidationError("line " + std::to_string(Line()) +
                              ": <NOTICE> without an id attribute");
      }
      if (!seen_ids_.insert(current_.id).second) {
        throw ValidationError("duplicate notice id '" + current_.id + "'");
      }
      return;
    }
    if (depth_ == 3) {
      if (name == "DEE") {
        field_ = Field::kDee;
      } else if (name == "TITRE") {
        if (current_.title) {
          throw ValidationError("notice '" + current_.id + "' has more than one <TITRE>");
        }
        field_ = Field::kTitre;
      } else if (name == "LEGENDE") {
        if (current_.legend) {
          throw ValidationError("notice '" + current_.id + "' has more than one <LEGENDE>");
        }
        field_ = Field::kLegende;
      } else {
        skip_depth_ = 1;
      }
      buffer_.clear();
      return;
    }
    // Markup nested inside a field contributes its text but nothing else.
  }

  void End(std::string_view) {
    --depth_;
    if (skip_depth_ > 0) {
      --skip_depth_;
      return;
    }
    if (depth_ == 1) {
      notices_.push_back(std::move(current_));
      return;
    }
    if (depth_ == 2 && field_ != Field::kNone) {
      const std::string text = CollapseWhitespace(ToNfc(buffer_));
      switch (field_) {
        case Field::kDee:
          try {
            current_.headings.push_back(SplitHeading(text));
          } catch (const ValidationError &e) {
            throw ValidationError("notice '" + current_.id + "': " + e.what());
          }
          break;
        case Field::kTitre:
          current_.title = text;
          break;
        case Field::kLegende:
          current_.legend = text;
          break;
        case Field::kNone:
          break;
      }
      field_ = Field::kNone;
      buffer_.clear();
    }
  }

  XML_Parser parser_;
  std::exception_ptr pending_error_;
  std::vector<Notice> notices_;
  std::set<std::string> seen_ids_;
  Notice current_;
  Field field_ = Field::kNone;
  std::string buffer_;
  int depth_ = 0;
  int skip_depth_ = 0;
  bool saw_root_ = false;
};

}  // namespace

SubjectHeading::SubjectHeading(std::vector<std::string> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw ValidationError("subject heading has no terms");
  for (const auto &term : terms_) {
    if (term.empty()) throw ValidationError("subject heading has an empty term");
    if (term.find(kSeparator) != std::string::npos) {
      throw ValidationError("term '" + term + "' contains the separator \"--\"");
    }
  }
}

SubjectHeading SplitHeading(std::string_view raw) {
  std::vector<std::string> terms;
  size_t start = 0;
  while (true) {
    const size_t pos = raw.find(kSeparator, start);
    const std::string_view piece =
        raw.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    std::string term = Trim(piece);
    if (term.empty()) {
      throw ValidationError("empty term in subject heading \"" + std::string(raw) + "\"");
    }
    terms.push_back(std::move(term));
    if (pos == std::string_view::npos) break;
    start = pos + kSeparator.size();
  }
  return SubjectHeading(std::move(terms));
}

const std::string &HeadTerm(const SubjectHeading &heading) { return heading.head(); }

std::vector<Notice> ParseNotices(std::string_view content) {
  NoticeReader reader;
  return reader.Read(content);
}

}  // namespace terridoc

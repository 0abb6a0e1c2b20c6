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

#include "terridoc/text.h"

#include <memory>
#include <stdexcept>

#include <unicode/normalizer2.h>
#include <unicode/translit.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace terridoc {
namespace {

const icu::Normalizer2 &Nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");
  return *nfc;
}

icu::UnicodeString NfcOf(const icu::UnicodeString &text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = Nfc().normalize(text, status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");
  return out;
}

icu::UnicodeString FromUtf8(std::string_view utf8) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
}

std::string ToUtf8(const icu::UnicodeString &text) {
  std::string out;
  text.toUTF8String(out);
  return out;
}

// Transliterator instances are not thread safe; keep one per thread.
icu::Transliterator &AsciiFolder() {
  thread_local std::unique_ptr<icu::Transliterator> folder = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::Transliterator> t(icu::Transliterator::createInstance(
        "NFD; [:Nonspacing Mark:] Remove; Latin-ASCII; NFC", UTRANS_FORWARD, status));
    if (U_FAILURE(status) || !t) throw std::runtime_error("ICU transliterator unavailable");
    return t;
  }();
  return *folder;
}

}  // namespace

std::string ToNfc(std::string_view utf8) { return ToUtf8(NfcOf(FromUtf8(utf8))); }

std::string NormalizeLabel(std::string_view raw) {
  icu::UnicodeString text = NfcOf(FromUtf8(raw));
  text.foldCase();
  text = NfcOf(text);

  icu::UnicodeString out;
  bool pending_space = false;
  for (int32_t i = 0; i < text.length();) {
    UChar32 c = text.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = !out.isEmpty();
      continue;
    }
    if (pending_space) {
      out.append(static_cast<UChar>(' '));
      pending_space = false;
    }
    out.append(c == 0x2019 ? static_cast<UChar32>('\'') : c);
  }
  return ToUtf8(out);
}

std::string FoldToAscii(std::string_view utf8) {
  icu::UnicodeString text = FromUtf8(utf8);
  AsciiFolder().transliterate(text);
  return ToUtf8(text);
}

std::string Slugify(std::string_view label) {
  const std::string ascii = FoldToAscii(NormalizeLabel(label));
  std::string slug;
  bool gap = false;
  for (unsigned char c : ascii) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (keep) {
      if (gap && !slug.empty()) slug.push_back('_');
      slug.push_back(static_cast<char>(c));
      gap = false;
    } else if (c >= 'A' && c <= 'Z') {
      // Latin-ASCII can emit uppercase for some ligatures.
      if (gap && !slug.empty()) slug.push_back('_');
      slug.push_back(static_cast<char>(c - 'A' + 'a'));
      gap = false;
    } else {
      gap = true;
    }
  }
  return slug.empty() ? "term" : slug;
}

std::string Trim(std::string_view utf8) {
  const std::u32string text = DecodeUtf8(utf8);
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && u_isUWhiteSpace(static_cast<UChar32>(text[begin]))) ++begin;
  while (end > begin && u_isUWhiteSpace(static_cast<UChar32>(text[end - 1]))) --end;
  return EncodeUtf8(std::u32string_view(text).substr(begin, end - begin));
}

std::u32string DecodeUtf8(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto *bytes = reinterpret_cast<const uint8_t *>(utf8.data());
  const int32_t length = static_cast<int32_t>(utf8.size());
  for (int32_t i = 0; i < length;) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back(c < 0 ? U'�' : static_cast<char32_t>(c));
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    uint8_t buf[4];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, 4, static_cast<UChar32>(c), error);
    if (error) {
      out += "\xEF\xBF\xBD";
    } else {
      out.append(reinterpret_cast<const char *>(buf), n);
    }
  }
  return out;
}

}  // namespace terridoc

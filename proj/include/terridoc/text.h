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

#ifndef TERRIDOC_TEXT_H_
#define TERRIDOC_TEXT_H_

#include <string>
#include <string_view>

namespace terridoc {

// NFC normalization only.
std::string ToNfc(std::string_view utf8);

// Canonical lookup key for a label: NFC, Unicode case folding, trimmed,
// internal whitespace collapsed to one space, U+2019 mapped to an ASCII
// apostrophe. Diacritics are kept. Idempotent.
std::string NormalizeLabel(std::string_view raw);

// Strips combining marks and transliterates to ASCII ("Béarn" -> "Bearn").
std::string FoldToAscii(std::string_view utf8);

// Node id slug: NormalizeLabel, FoldToAscii, every run of characters outside
// [a-z0-9] becomes "_", leading/trailing "_" removed. Never empty.
std::string Slugify(std::string_view label);

// Trims Unicode white space at both ends.
std::string Trim(std::string_view utf8);

std::u32string DecodeUtf8(std::string_view utf8);
std::string EncodeUtf8(std::u32string_view text);

}  // namespace terridoc

#endif  // TERRIDOC_TEXT_H_

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

#ifndef TERRIDOC_ERRORS_H_
#define TERRIDOC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace terridoc {

// Input text that does not follow its file format (bad markup, missing CSV
// header, broken JSON). Carries the 1-based line number when known, else 0.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input that breaks a data invariant (duplicate id, dangling
// reference, cycle, out-of-range coordinate).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem or network failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace terridoc

#endif  // TERRIDOC_ERRORS_H_

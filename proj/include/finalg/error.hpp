// Copyright 2026 the finalg authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace finalg {

/// Input text could not be parsed. line/col are 1-based; 0 means unknown.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, int line = 0, int col = 0)
      : std::runtime_error(format(message, line, col)), line_(line), col_(col) {}

  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  static std::string format(const std::string& message, int line, int col) {
    if (line <= 0) return message;
    std::string out = "line " + std::to_string(line);
    if (col > 0) out += ", col " + std::to_string(col);
    return out + ": " + message;
  }

  int line_;
  int col_;
};

/// A configured resource guard was exceeded.
class limit_error : public std::runtime_error {
 public:
  explicit limit_error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace finalg

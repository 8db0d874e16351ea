// Copyright 2026 The Prosody Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prosody {

// Raised for any problem with the data handed to the library: malformed
// files, invalid symbols, inconsistent sizes, degenerate samples.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A DataError with a source position. Line and column are 1-based; a value
// of 0 means "not applicable".
class ParseError : public DataError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : DataError(Format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string Format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string out;
    if (line != 0) out += "line " + std::to_string(line);
    if (column != 0) {
      if (!out.empty()) out += ", ";
      out += "column " + std::to_string(column);
    }
    if (!out.empty()) out += ": ";
    return out + message;
  }

  std::size_t line_;
  std::size_t column_;
};

// Variance ratio requested with a zero-variance denominator.
class DegenerateSample : public DataError {
 public:
  DegenerateSample() : DataError("degenerate sample") {}
};

}  // namespace prosody

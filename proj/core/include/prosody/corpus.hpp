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
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "prosody/coder.hpp"
#include "prosody/frechet.hpp"
#include "prosody/metric.hpp"

namespace prosody {

// Reference data embedded in the library: the opening ten lines of the
// Piers Plowman prologue and their two codings, the two published distance
// matrices, and the Oakden meter counts for Sir Gawain and Piers Plowman B.
struct Fixture {
  enum class Kind { kLines, kCodes, kMatrix, kCounts };

  std::string name;
  std::string provenance;
  Kind kind;
  std::variant<std::vector<std::string>, DistanceMatrix, CountTable> payload;

  // Each throws DataError if the fixture holds a different kind. On a
  // temporary (load_fixture(name).lines()) the payload is moved out.
  const std::vector<std::string>& lines() const&;
  const DistanceMatrix& matrix() const&;
  const CountTable& counts() const&;
  std::vector<std::string> lines() &&;
  DistanceMatrix matrix() &&;
  CountTable counts() &&;

  // Canonical text form: lines, matrix CSV, or counts TSV.
  std::string serialize() const;
};

std::vector<std::string> fixture_names();

// Throws DataError listing the available names when `name` is unknown.
Fixture load_fixture(std::string_view name);

// 1-based inclusive ranges of file lines to drop, e.g. "1-3,17".
struct SkipDirectives {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;

  static SkipDirectives parse(std::string_view text);
  bool skips(std::size_t line_number) const;
};

struct PoemLine {
  std::size_t line_number;  // in the source file
  std::string text;
};

struct IngestedPoem {
  std::vector<PoemLine> lines;
  std::size_t skipped = 0;  // comment, blank, and directive-skipped lines

  // True when any kept line carries '*' marks.
  bool annotated() const;
};

// One poetic line per text line; lines starting with '#' and blank lines are
// skipped. Invalid UTF-8 raises ParseError with its line number, and a
// result with no lines raises DataError("no lines").
IngestedPoem ingest_poem_text(std::string_view text, const SkipDirectives& skips = {});
IngestedPoem ingest_poem(const std::filesystem::path& path, const SkipDirectives& skips = {});

// Marks-derived strings for annotated poems, auto-coded otherwise.
std::vector<PositionString> code_poem(const IngestedPoem& poem, Variant variant,
                                      const CoderOptions& options = {});

// pattern<TAB>count rows; '#' comments and blank lines ignored.
CountTable parse_count_table(std::string_view text);
CountTable read_count_table(const std::filesystem::path& path);
std::string count_table_tsv(const CountTable& table);

// Whole file contents; DataError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace prosody

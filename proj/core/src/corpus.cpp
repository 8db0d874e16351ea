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

#include "prosody/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "prosody/error.hpp"

namespace prosody {
namespace {

constexpr std::string_view kFigure1Lines =
    "In a somer seson / whan softe was the sonne ,\n"
    "I shoop me into shroudes / as I a sheep were,\n"
    "In habite as an heremite / unholy of werkes,\n"
    "Wente wide in this world / wondres to here.\n"
    "Ac on a May morwenyng / on Malverne hilles\n"
    "Me bifel a ferly / of Fairye me thoghte.\n"
    "I was wery forwandred / and wente me to reste\n"
    "Under a brood bank / by a bourne syde;\n"
    "And as I lay and lenede / and loked on the watres,\n"
    "I slombred into a slepyng / it sweyed so murye.\n";

// Every alliterating-initial word marked, stressed or not.
constexpr std::string_view kFigure1CodesA =
    "001101001\n0100100010\n01001000\n11001100\n00011010\n"
    "00010100\n011001000\n00111010\n00010101000\n010010110\n";

// Stressed alliterating words only, unstressed prefixes looked through.
constexpr std::string_view kFigure1CodesB =
    "001101001\n0100100010\n01001100\n01001100\n00011010\n"
    "01010100\n001101000\n00110010\n00010101000\n010010100\n";

constexpr std::string_view kFigure2Matrix =
    "0,4,4,4,3,3,1,3,3,3\n"
    "4,0,3,3,3,3,4,3,4,2\n"
    "4,3,0,0,2,2,3,4,4,1\n"
    "4,3,0,0,2,2,3,4,4,1\n"
    "3,3,2,2,0,3,3,2,3,3\n"
    "3,3,2,2,3,0,3,4,3,1\n"
    "1,4,3,3,3,3,0,2,2,3\n"
    "3,3,4,4,2,4,2,0,4,4\n"
    "3,4,4,4,3,3,2,4,0,3\n"
    "3,2,1,1,3,1,3,4,3,0\n";

// Rows and columns in table1 pattern order.
constexpr std::string_view kFigure7Matrix =
    "0,2,1,1,3,2,2,2,1,1,2,2,3,2,1,3\n"
    "2,0,1,3,1,2,2,2,3,3,2,3,2,2,1,3\n"
    "1,1,0,2,2,1,1,1,2,2,2,2,2,3,2,4\n"
    "1,3,2,0,2,1,3,3,2,2,3,3,4,1,2,4\n"
    "3,1,2,2,0,1,3,3,4,4,3,4,3,1,2,4\n"
    "2,2,1,1,1,0,2,2,3,3,3,3,3,2,3,5\n"
    "2,2,1,3,3,2,0,2,1,3,3,2,2,4,3,3\n"
    "2,2,1,3,3,2,2,0,3,1,3,3,3,4,3,3\n"
    "1,3,2,2,4,3,1,3,0,2,3,2,3,3,2,2\n"
    "1,3,2,2,4,3,3,1,2,0,3,3,4,3,2,2\n"
    "2,2,2,3,3,3,3,3,3,3,0,2,2,3,2,4\n"
    "2,3,2,3,4,3,2,3,2,3,2,0,2,4,3,4\n"
    "3,2,2,4,3,3,2,3,3,4,2,2,0,4,3,4\n"
    "2,2,3,1,1,2,4,4,3,3,3,4,4,0,1,3\n"
    "1,1,2,2,2,3,3,3,2,2,2,3,3,1,0,2\n"
    "3,3,4,4,4,5,3,3,2,2,4,4,4,3,2,0\n";

// Oakden's counts with the complex-groups category removed.
constexpr std::string_view kTable1Sggk =
    "aa/ax\t1532\naa/xa\t23\naa/aa\t70\naaa/ax\t239\naaa/xa\t4\naaa/aa\t14\n"
    "ax/aa\t6\nxa/aa\t4\nax/ax\t40\nxa/ax\t59\naa/bb\t2\nab/ab\t10\nab/ba\t5\n"
    "aaa/xx\t2\naa/xx\t0\nxx/xx\t0\n";

constexpr std::string_view kTable1Ppb =
    "aa/ax\t4993\naa/xa\t117\naa/aa\t538\naaa/ax\t291\naaa/xa\t291\naaa/aa\t64\n"
    "ax/aa\t39\nxa/aa\t39\nax/ax\t114\nxa/ax\t135\naa/bb\t71\nab/ab\t14\nab/ba\t6\n"
    "aaa/xx\t0\naa/xx\t241\nxx/xx\t50\n";

constexpr std::string_view kTable1Combined =
    "aa/ax\t6525\naa/xa\t140\naa/aa\t608\naaa/ax\t530\naaa/xa\t295\naaa/aa\t78\n"
    "ax/aa\t45\nxa/aa\t43\nax/ax\t154\nxa/ax\t194\naa/bb\t73\nab/ab\t24\nab/ba\t11\n"
    "aaa/xx\t2\naa/xx\t241\nxx/xx\t50\n";

struct FixtureSource {
  std::string_view name;
  std::string_view provenance;
  Fixture::Kind kind;
  std::string_view text;
};

constexpr FixtureSource kFixtures[] = {
    {"figure1_lines",
     "Langland, Piers Plowman B, Prologue 1-10 (caesurae after Skeat)",
     Fixture::Kind::kLines, kFigure1Lines},
    {"figure1_codes_variant_a",
     "Piers Plowman B, Prologue 1-10, every alliterating-initial word marked",
     Fixture::Kind::kCodes, kFigure1CodesA},
    {"figure1_codes_variant_b",
     "Piers Plowman B, Prologue 1-10, stressed alliterating words marked",
     Fixture::Kind::kCodes, kFigure1CodesB},
    {"figure2_matrix",
     "edit distances between the figure1_codes_variant_b strings",
     Fixture::Kind::kMatrix, kFigure2Matrix},
    {"figure7_matrix",
     "edit distances between the table1 meter patterns, in table order",
     Fixture::Kind::kMatrix, kFigure7Matrix},
    {"table1_sggk",
     "Oakden (1968), Sir Gawain meter counts, pp. 190-1, complex groups dropped",
     Fixture::Kind::kCounts, kTable1Sggk},
    {"table1_ppb",
     "Oakden (1968), Piers Plowman B percentages pp. 186-7 over 7089 lines, "
     "complex groups dropped",
     Fixture::Kind::kCounts, kTable1Ppb},
    {"table1_combined",
     "sum of table1_sggk and table1_ppb",
     Fixture::Kind::kCounts, kTable1Combined},
};

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t ParseSize(std::string_view s, std::string_view what) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    throw DataError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

const std::vector<std::string>& Fixture::lines() const& {
  if (const auto* v = std::get_if<std::vector<std::string>>(&payload)) return *v;
  throw DataError("fixture " + name + " does not hold lines");
}

const DistanceMatrix& Fixture::matrix() const& {
  if (const auto* v = std::get_if<DistanceMatrix>(&payload)) return *v;
  throw DataError("fixture " + name + " does not hold a matrix");
}

const CountTable& Fixture::counts() const& {
  if (const auto* v = std::get_if<CountTable>(&payload)) return *v;
  throw DataError("fixture " + name + " does not hold a count table");
}

std::vector<std::string> Fixture::lines() && {
  lines();
  return std::get<std::vector<std::string>>(std::move(payload));
}

DistanceMatrix Fixture::matrix() && {
  matrix();
  return std::get<DistanceMatrix>(std::move(payload));
}

CountTable Fixture::counts() && {
  counts();
  return std::get<CountTable>(std::move(payload));
}

std::string Fixture::serialize() const {
  switch (kind) {
    case Kind::kLines:
    case Kind::kCodes: {
      std::string out;
      for (const auto& l : lines()) out += l + "\n";
      return out;
    }
    case Kind::kMatrix:
      return matrix().to_csv();
    case Kind::kCounts:
      return count_table_tsv(counts());
  }
  return {};
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : kFixtures) out.emplace_back(f.name);
  return out;
}

Fixture load_fixture(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (f.name != name) continue;
    Fixture out{std::string(f.name), std::string(f.provenance), f.kind, {}};
    switch (f.kind) {
      case Fixture::Kind::kLines:
      case Fixture::Kind::kCodes:
        out.payload = SplitLines(f.text);
        break;
      case Fixture::Kind::kMatrix:
        out.payload = DistanceMatrix::from_csv(f.text);
        break;
      case Fixture::Kind::kCounts:
        out.payload = parse_count_table(f.text);
        break;
    }
    return out;
  }
  std::string available;
  for (const auto& n : fixture_names()) available += (available.empty() ? "" : ", ") + n;
  throw DataError("unknown fixture '" + std::string(name) + "'; available: " + available);
}

SkipDirectives SkipDirectives::parse(std::string_view text) {
  SkipDirectives out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = Trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto dash = item.find('-');
    const std::size_t first = ParseSize(Trim(item.substr(0, dash)), "skip range");
    const std::size_t last =
        dash == std::string_view::npos ? first
                                       : ParseSize(Trim(item.substr(dash + 1)), "skip range");
    if (first == 0 || last < first) {
      throw DataError("invalid skip range '" + std::string(item) + "'");
    }
    out.ranges.emplace_back(first, last);
  }
  return out;
}

bool SkipDirectives::skips(std::size_t line_number) const {
  return std::any_of(ranges.begin(), ranges.end(), [&](const auto& r) {
    return line_number >= r.first && line_number <= r.second;
  });
}

bool IngestedPoem::annotated() const {
  return std::any_of(lines.begin(), lines.end(), [](const PoemLine& l) {
    return l.text.find('*') != std::string::npos;
  });
}

IngestedPoem ingest_poem_text(std::string_view text, const SkipDirectives& skips) {
  IngestedPoem out;
  std::size_t number = 0;
  for (auto& line : SplitLines(text)) {
    ++number;
    try {
      (void)to_symbols(line);
    } catch (const DataError& e) {
      throw ParseError(e.what(), number, 0);
    }
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#' || skips.skips(number)) {
      ++out.skipped;
      continue;
    }
    out.lines.push_back({number, std::string(trimmed)});
  }
  if (out.lines.empty()) throw DataError("no lines");
  return out;
}

IngestedPoem ingest_poem(const std::filesystem::path& path, const SkipDirectives& skips) {
  try {
    return ingest_poem_text(read_text_file(path), skips);
  } catch (const ParseError& e) {
    throw DataError(path.string() + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::vector<PositionString> code_poem(const IngestedPoem& poem, Variant variant,
                                      const CoderOptions& options) {
  std::vector<PositionString> out;
  out.reserve(poem.lines.size());
  const bool annotated = poem.annotated();
  for (const auto& line : poem.lines) {
    try {
      if (annotated) {
        out.push_back(parse_annotated_line(line.text).position_string());
      } else {
        out.push_back(auto_code_line(tokenize(line.text), variant, options));
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line.line_number, 0);
    } catch (const DataError& e) {
      throw ParseError(e.what(), line.line_number, 0);
    }
  }
  return out;
}

CountTable parse_count_table(std::string_view text) {
  std::vector<CountTable::Row> rows;
  std::size_t number = 0;
  for (const auto& raw : SplitLines(text)) {
    ++number;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("expected pattern<TAB>count", number, 0);
    }
    const std::string_view pattern = Trim(line.substr(0, tab));
    const std::string_view count = Trim(line.substr(tab + 1));
    try {
      rows.push_back({MeterPattern::parse(pattern), ParseSize(count, "count")});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number, e.column());
    } catch (const DataError& e) {
      throw ParseError(e.what(), number, tab + 2);
    }
  }
  if (rows.empty()) throw DataError("count table has no rows");
  return CountTable(std::move(rows));
}

CountTable read_count_table(const std::filesystem::path& path) {
  try {
    return parse_count_table(read_text_file(path));
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string count_table_tsv(const CountTable& table) {
  std::string out;
  for (const auto& r : table.rows()) {
    out += r.pattern.text() + "\t" + std::to_string(r.count) + "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw DataError("error reading " + path.string());
  return buffer.str();
}

}  // namespace prosody

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

#include "prosody/metric.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <thread>

#include "prosody/error.hpp"

namespace prosody {

Distance edit_distance(std::u32string_view s, std::u32string_view t) {
  if (s.size() < t.size()) std::swap(s, t);
  // t is the shorter sequence; one DP row over it.
  std::vector<Distance> row(t.size() + 1);
  std::iota(row.begin(), row.end(), Distance{0});
  for (std::size_t i = 0; i < s.size(); ++i) {
    Distance diagonal = row[0];
    row[0] = static_cast<Distance>(i + 1);
    for (std::size_t j = 0; j < t.size(); ++j) {
      const Distance above = row[j + 1];
      const Distance substitute = diagonal + (s[i] == t[j] ? 0 : 1);
      row[j + 1] = std::min({above + 1, row[j] + 1, substitute});
      diagonal = above;
    }
  }
  return row[t.size()];
}

Distance DistanceMatrix::max_entry() const noexcept {
  if (entries_.empty()) return 0;
  return *std::max_element(entries_.begin(), entries_.end());
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<Distance>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw DataError("empty dataset");
  std::vector<Distance> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError("row has " + std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(n),
                       i + 1, 0);
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  auto at = [&](std::size_t i, std::size_t j) { return entries[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0) throw ParseError("nonzero diagonal entry", i + 1, i + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (at(i, j) != at(j, i)) throw ParseError("matrix is not symmetric", i + 1, j + 1);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (at(i, k) > at(i, j) + at(j, k)) {
          throw ParseError("triangle inequality fails through row " + std::to_string(j + 1),
                           i + 1, k + 1);
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

DistanceMatrix DistanceMatrix::from_csv(std::string_view text) {
  std::vector<std::vector<Distance>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<Distance> row;
    std::size_t column = 0;
    std::size_t pos = 0;
    while (true) {
      ++column;
      const auto comma = line.find(',', pos);
      std::string_view cell = line.substr(pos, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - pos);
      while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
      while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
      Distance value = 0;
      const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc{} || end != cell.data() + cell.size()) {
        throw ParseError("cell is not a nonnegative integer: '" + std::string(cell) + "'",
                         line_no, column);
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

std::string DistanceMatrix::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != 0) out << ',';
      out << (*this)(i, j);
    }
    out << '\n';
  }
  return out.str();
}

DistanceMatrix distance_matrix(std::span<const SymbolSequence> items, unsigned threads) {
  const std::size_t n = items.size();
  if (n == 0) throw DataError("empty dataset");
  std::vector<Distance> entries(n * n, 0);

  // Row i writes entries (i, j) and (j, i) for j > i only, so rows never
  // touch the same cell and workers need no synchronization.
  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Distance d = edit_distance(items[i], items[j]);
      entries[i * n + j] = d;
      entries[j * n + i] = d;
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      // Strided assignment balances the shrinking triangle rows.
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += threads) fill_row(i);
      });
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

}  // namespace prosody

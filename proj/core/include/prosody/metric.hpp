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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prosody/unicode.hpp"

namespace prosody {

using Distance = std::uint32_t;

// Levenshtein distance with unit insert/delete/substitute costs.
// O(|s|*|t|) time, O(min(|s|,|t|)) space.
Distance edit_distance(std::u32string_view s, std::u32string_view t);

// Dense symmetric matrix of pairwise distances. Immutable once built.
//
// Instances built by distance_matrix() are correct by construction; those
// built from external rows or CSV are checked against the metric axioms
// (zero diagonal, symmetry, triangle inequality) and rejected otherwise.
class DistanceMatrix {
 public:
  static DistanceMatrix from_rows(const std::vector<std::vector<Distance>>& rows);

  // Integer entries, comma-separated, one row per line, no header.
  static DistanceMatrix from_csv(std::string_view text);
  std::string to_csv() const;

  std::size_t size() const noexcept { return n_; }
  Distance operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * n_ + j];
  }
  std::span<const Distance> row(std::size_t i) const noexcept {
    return {entries_.data() + i * n_, n_};
  }
  Distance max_entry() const noexcept;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  DistanceMatrix(std::size_t n, std::vector<Distance> entries)
      : n_(n), entries_(std::move(entries)) {}

  friend DistanceMatrix distance_matrix(std::span<const SymbolSequence>, unsigned);

  std::size_t n_ = 0;
  std::vector<Distance> entries_;
};

// Computes the upper triangle and mirrors it. Rows are split across
// `threads` workers; the result does not depend on the thread count.
// Throws DataError("empty dataset") for an empty list.
DistanceMatrix distance_matrix(std::span<const SymbolSequence> items, unsigned threads = 1);

}  // namespace prosody

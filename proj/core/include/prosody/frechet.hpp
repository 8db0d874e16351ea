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

// Generalized (Frechet) mean and variance over a finite metric space.
//
// The candidate set is the attested items themselves: for each row i of a
// distance matrix the objective is S_i = sum_j d(i, j)^p, the mean is every
// row attaining min S_i, and the variance is min S_i / n. p = 2 gives the
// generalized mean, p = 1 the generalized median.
//
// All objectives are exact 64-bit integers; arithmetic that would overflow
// throws DataError instead of wrapping.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prosody/meter.hpp"
#include "prosody/metric.hpp"
#include "prosody/rational.hpp"

namespace prosody {

struct FrechetSummary {
  // Ascending; every index attains the minimal objective.
  std::vector<std::size_t> mean_indices;
  std::uint64_t variance_numerator = 0;
  std::uint64_t variance_denominator = 1;
  unsigned power = 2;

  Rational variance() const { return Rational(variance_numerator, variance_denominator); }
  double variance_value() const { return variance().to_double(); }
  bool is_median() const noexcept { return power == 1; }

  friend bool operator==(const FrechetSummary&, const FrechetSummary&) = default;
};

// How pattern counts enter the objective of weighted_frechet.
enum class Weighting {
  // sum_j (c_j * d_ij)^p : rows of D times the diagonal count matrix, then
  // powered. Gives 71011/2010 on the table1_sggk fixture.
  kScaledDistance,
  // sum_j c_j * d_ij^p : each pattern counted c_j times.
  kCountMultiplicity,
};

std::string to_string(Weighting w);

std::vector<std::uint64_t> row_objectives(const DistanceMatrix& d, unsigned power = 2);

FrechetSummary frechet_summary(const DistanceMatrix& d, unsigned power = 2);

// Same as above restricted to the sub-matrix on `subset` (indices into d).
// Reported mean_indices are positions within `subset`.
FrechetSummary frechet_summary(const DistanceMatrix& d, std::span<const std::size_t> subset,
                               unsigned power = 2);

// Ordered (pattern, count) rows. Patterns are distinct and the total is
// positive; zero counts are allowed so two tables can share one universe.
class CountTable {
 public:
  struct Row {
    MeterPattern pattern;
    std::uint64_t count;
  };

  explicit CountTable(std::vector<Row> rows);

  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  std::uint64_t total() const noexcept { return total_; }
  std::vector<std::uint64_t> counts() const;
  std::vector<SymbolSequence> pattern_symbols() const;

  // Both tables re-expressed over the union of their patterns, in order of
  // first appearance (a's rows, then b's new ones), zero-filled.
  static std::pair<CountTable, CountTable> align(const CountTable& a, const CountTable& b);

 private:
  std::vector<Row> rows_;
  std::uint64_t total_ = 0;
};

std::vector<std::uint64_t> weighted_objectives(const DistanceMatrix& d,
                                               std::span<const std::uint64_t> counts,
                                               Weighting weighting = Weighting::kScaledDistance,
                                               unsigned power = 2);

// Variance denominator is the number of lines (sum of counts).
FrechetSummary weighted_frechet(const DistanceMatrix& d, std::span<const std::uint64_t> counts,
                                Weighting weighting = Weighting::kScaledDistance,
                                unsigned power = 2);
FrechetSummary weighted_frechet(const DistanceMatrix& d, const CountTable& counts,
                                Weighting weighting = Weighting::kScaledDistance,
                                unsigned power = 2);

// variance(numerator) / variance(denominator), exact. Throws
// DegenerateSample when the denominator variance is zero.
Rational variance_ratio(const FrechetSummary& numerator, const FrechetSummary& denominator);

}  // namespace prosody

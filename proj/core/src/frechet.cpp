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

#include "prosody/frechet.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "prosody/error.hpp"

namespace prosody {
namespace {

std::uint64_t CheckedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DataError("objective overflows 64 bits");
  return out;
}

std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DataError("objective overflows 64 bits");
  return out;
}

std::uint64_t CheckedPow(std::uint64_t base, unsigned power) {
  std::uint64_t out = 1;
  for (unsigned k = 0; k < power; ++k) out = CheckedMul(out, base);
  return out;
}

void CheckPower(unsigned power) {
  if (power == 0) throw DataError("power must be a positive integer");
}

// Lowest objective and every index attaining it, in ascending order.
FrechetSummary Minimize(std::span<const std::uint64_t> objectives, std::uint64_t n,
                        unsigned power) {
  FrechetSummary out;
  out.power = power;
  out.variance_denominator = n;
  out.variance_numerator = *std::min_element(objectives.begin(), objectives.end());
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    if (objectives[i] == out.variance_numerator) out.mean_indices.push_back(i);
  }
  return out;
}

}  // namespace

std::string to_string(Weighting w) {
  switch (w) {
    case Weighting::kScaledDistance:
      return "paper_dc_squared";
    case Weighting::kCountMultiplicity:
      return "conventional";
  }
  return "unknown";
}

std::vector<std::uint64_t> row_objectives(const DistanceMatrix& d, unsigned power) {
  CheckPower(power);
  std::vector<std::uint64_t> out(d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (const Distance x : d.row(i)) out[i] = CheckedAdd(out[i], CheckedPow(x, power));
  }
  return out;
}

FrechetSummary frechet_summary(const DistanceMatrix& d, unsigned power) {
  const auto objectives = row_objectives(d, power);
  return Minimize(objectives, d.size(), power);
}

FrechetSummary frechet_summary(const DistanceMatrix& d, std::span<const std::size_t> subset,
                               unsigned power) {
  CheckPower(power);
  if (subset.empty()) throw DataError("empty dataset");
  std::vector<std::uint64_t> objectives(subset.size(), 0);
  for (std::size_t a = 0; a < subset.size(); ++a) {
    const auto row = d.row(subset[a]);
    std::uint64_t sum = 0;
    if (power == 2) {
      // Hot path of the line permutation test; x * x fits since x < 2^32.
      for (const std::size_t j : subset) {
        const std::uint64_t x = row[j];
        sum = CheckedAdd(sum, x * x);
      }
    } else {
      for (const std::size_t j : subset) sum = CheckedAdd(sum, CheckedPow(row[j], power));
    }
    objectives[a] = sum;
  }
  return Minimize(objectives, subset.size(), power);
}

CountTable::CountTable(std::vector<Row> rows) : rows_(std::move(rows)) {
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto [it, inserted] = seen.emplace(rows_[i].pattern.text(), i);
    if (!inserted) {
      throw ParseError("duplicate pattern \"" + rows_[i].pattern.text() + "\"", i + 1, 0);
    }
    total_ = CheckedAdd(total_, rows_[i].count);
  }
  if (total_ == 0) throw DataError("count table total must be positive");
}

std::vector<std::uint64_t> CountTable::counts() const {
  std::vector<std::uint64_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.count);
  return out;
}

std::vector<SymbolSequence> CountTable::pattern_symbols() const {
  std::vector<SymbolSequence> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.pattern.symbols());
  return out;
}

std::pair<CountTable, CountTable> CountTable::align(const CountTable& a, const CountTable& b) {
  std::vector<MeterPattern> universe;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto* table : {&a, &b}) {
    for (const auto& r : table->rows()) {
      if (index.emplace(r.pattern.text(), universe.size()).second) universe.push_back(r.pattern);
    }
  }
  auto project = [&](const CountTable& t) {
    std::vector<Row> rows;
    rows.reserve(universe.size());
    for (const auto& p : universe) rows.push_back({p, 0});
    for (const auto& r : t.rows()) rows[index.at(r.pattern.text())].count = r.count;
    return CountTable(std::move(rows));
  };
  return {project(a), project(b)};
}

std::vector<std::uint64_t> weighted_objectives(const DistanceMatrix& d,
                                               std::span<const std::uint64_t> counts,
                                               Weighting weighting, unsigned power) {
  CheckPower(power);
  if (counts.size() != d.size()) {
    throw DataError("count table has " + std::to_string(counts.size()) +
                    " rows but the distance matrix has " + std::to_string(d.size()));
  }
  std::vector<std::uint64_t> out(d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto row = d.row(i);
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::uint64_t term = weighting == Weighting::kScaledDistance
                                     ? CheckedPow(CheckedMul(counts[j], row[j]), power)
                                     : CheckedMul(counts[j], CheckedPow(row[j], power));
      sum = CheckedAdd(sum, term);
    }
    out[i] = sum;
  }
  return out;
}

FrechetSummary weighted_frechet(const DistanceMatrix& d, std::span<const std::uint64_t> counts,
                                Weighting weighting, unsigned power) {
  const auto objectives = weighted_objectives(d, counts, weighting, power);
  std::uint64_t lines = 0;
  for (const auto c : counts) lines = CheckedAdd(lines, c);
  if (lines == 0) throw DataError("count table total must be positive");
  return Minimize(objectives, lines, power);
}

FrechetSummary weighted_frechet(const DistanceMatrix& d, const CountTable& counts,
                                Weighting weighting, unsigned power) {
  const auto c = counts.counts();
  return weighted_frechet(d, std::span<const std::uint64_t>(c), weighting, power);
}

Rational variance_ratio(const FrechetSummary& numerator, const FrechetSummary& denominator) {
  if (denominator.variance_numerator == 0) throw DegenerateSample();
  return Rational::quotient(numerator.variance(), denominator.variance());
}

}  // namespace prosody

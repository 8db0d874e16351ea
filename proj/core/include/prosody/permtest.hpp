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

// Permutation tests for equality of generalized variances.
//
// Reproducibility contract: resample i draws only from the stream
// RandomStream(child_seed(seed, i)), so a result depends on (inputs, seed,
// resample count) and not on thread count or scheduling.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prosody/error.hpp"
#include "prosody/frechet.hpp"
#include "prosody/metric.hpp"
#include "prosody/rational.hpp"

namespace prosody {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of resample `index` under master seed `master`.
constexpr std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(master ^ splitmix64(index));
}

// A std::mt19937_64 stream with an unbiased bounded draw. Both the engine
// and the draw are fully specified here, so sequences are identical on
// every standard library (std::uniform_int_distribution is not).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, bound); bound > 0. Rejection sampling on the low residue.
  std::uint64_t uniform_below(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Fisher-Yates, drawing j uniformly from [0, i] for i = n-1 down to 1.
template <class T>
void shuffle_in_place(std::span<T> items, RandomStream& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

// Uniformly permutes `items` and splits the result at position n1.
template <class T>
std::pair<std::vector<T>, std::vector<T>> permute_split(std::span<const T> items, std::size_t n1,
                                                        std::size_t n2, RandomStream& rng) {
  if (n1 + n2 != items.size()) {
    throw DataError("split sizes " + std::to_string(n1) + " + " + std::to_string(n2) +
                    " do not match " + std::to_string(items.size()) + " items");
  }
  std::vector<T> shuffled(items.begin(), items.end());
  shuffle_in_place(std::span<T>(shuffled), rng);
#ifndef NDEBUG
  {
    std::vector<T> before(items.begin(), items.end());
    std::vector<T> after = shuffled;
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    assert(before == after && "permutation must conserve the multiset");
  }
#endif
  std::vector<T> second(shuffled.begin() + static_cast<std::ptrdiff_t>(n1), shuffled.end());
  shuffled.resize(n1);
  return {std::move(shuffled), std::move(second)};
}

enum class Tail {
  // r qualifies when r >= max(obs, 1/obs) or r <= min(obs, 1/obs).
  kTwoTailedReciprocal,
  // r qualifies when r >= obs.
  kOneSidedGreater,
};

std::string to_string(Tail tail);

bool qualifies(const Rational& r, const Rational& observed, Tail tail);
bool qualifies(double r, double observed, Tail tail);

// Proportion of qualifying resamples; comparisons are inclusive. With
// plus_one the (b + 1) / (n + 1) correction is applied.
double empirical_p(const Rational& observed, std::span<const Rational> resamples, Tail tail,
                   bool plus_one = false);
double empirical_p(double observed, std::span<const double> resamples, Tail tail,
                   bool plus_one = false);

// Ratio of generalized variances that never throws: x/0 is +inf, 0/x is 0,
// and 0/0 is 1.
Rational degenerate_safe_ratio(const FrechetSummary& numerator,
                               const FrechetSummary& denominator);

struct PermTestOptions {
  std::uint64_t seed = 0;
  std::size_t resamples = 1000;
  unsigned power = 2;
  // Unset: two-tailed for lines, one-sided for counts.
  std::optional<Tail> tail;
  Weighting weighting = Weighting::kScaledDistance;
  bool plus_one = false;
  unsigned threads = 1;
};

struct PermTestResult {
  // The ratio is always second sample's variance over first sample's.
  Rational observed_ratio;
  std::vector<Rational> resample_ratios;
  std::size_t qualifying = 0;
  double p_value = 0.0;
  Tail tail = Tail::kTwoTailedReciprocal;
  std::uint64_t seed = 0;
  std::size_t n_resamples = 0;
  bool plus_one = false;
  FrechetSummary first;
  FrechetSummary second;

  friend bool operator==(const PermTestResult&, const PermTestResult&) = default;
};

// Pools both line collections, reshuffles, splits into the original sizes,
// and recomputes the variance ratio for every resample. Distances come from
// one pooled matrix computed once.
PermTestResult line_permutation_test(std::span<const SymbolSequence> first,
                                     std::span<const SymbolSequence> second,
                                     const PermTestOptions& options);

// Pools the pattern labels of two aligned count tables (same patterns, same
// order, matching `d`), reshuffles, re-tabulates into tables of the original
// totals, and recomputes the weighted variance ratio.
PermTestResult counts_permutation_test(const CountTable& first, const CountTable& second,
                                       const DistanceMatrix& d, const PermTestOptions& options);

}  // namespace prosody

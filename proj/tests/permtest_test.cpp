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


#include "prosody/permtest.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

#include "prosody/corpus.hpp"
#include "prosody/error.hpp"
#include "prosody/report.hpp"
#include "support/testing.hpp"

namespace prosody {
namespace {

using testing::Gen;
using testing::u32_all;

std::vector<SymbolSequence> variant_codes(const char* name) {
  return u32_all(load_fixture(name).lines());
}

TEST(Random, KnownValues) {
  // First output of SplitMix64 from state 0, and the 10000th output of a
  // default-seeded mt19937_64 as fixed by the C++ standard.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  RandomStream rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next();
  EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(Random, ChildSeedsDiffer) {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.push_back(child_seed(7, i));
  std::sort(seeds.begin(), seeds.end());
  EXPECT_EQ(std::adjacent_find(seeds.begin(), seeds.end()), seeds.end());
  EXPECT_NE(child_seed(7, 0), child_seed(8, 0));
}

TEST(Random, UniformBelowStaysInRangeAndCoversIt) {
  RandomStream rng(3);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL}) {
    std::vector<int> seen(bound, 0);
    for (int i = 0; i < 20000; ++i) {
      const auto v = rng.uniform_below(bound);
      ASSERT_LT(v, bound);
      ++seen[v];
    }
    if (bound <= 7) {
      const double expect = 20000.0 / static_cast<double>(bound);
      for (int c : seen) EXPECT_NEAR(c, expect, 5 * std::sqrt(expect));
    }
  }
}

TEST(PermuteSplit, SeededGolden) {
  const std::vector<int> items{1, 2, 3, 4, 5, 6};
  RandomStream rng(42);
  const auto [a, b] = permute_split(std::span<const int>(items), 2, 4, rng);
  EXPECT_EQ(a, (std::vector<int>{4, 2}));
  EXPECT_EQ(b, (std::vector<int>{6, 3, 5, 1}));
}

TEST(PermuteSplit, ConservesMultisetAndSizes) {
  Gen gen(41);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = gen.size(0, 40);
    std::vector<int> items(n);
    for (auto& x : items) x = static_cast<int>(gen.size(0, 5));  // repeats on purpose
    const std::size_t n1 = gen.size(0, n);
    RandomStream rng(seed);
    auto [a, b] = permute_split(std::span<const int>(items), n1, n - n1, rng);
    ASSERT_EQ(a.size(), n1);
    ASSERT_EQ(b.size(), n - n1);
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    std::sort(items.begin(), items.end());
    EXPECT_EQ(a, items);
  }
}

TEST(PermuteSplit, EdgeSplits) {
  const std::vector<int> items{1, 2, 3};
  RandomStream rng(1);
  EXPECT_EQ(permute_split(std::span<const int>(items), 0, 3, rng).first.size(), 0u);
  EXPECT_EQ(permute_split(std::span<const int>(items), 3, 0, rng).second.size(), 0u);
  EXPECT_THROW(permute_split(std::span<const int>(items), 2, 2, rng), DataError);
}

TEST(PermuteSplit, EveryArrangementReachable) {
  // 3! orderings of three items, each near 1/6 of the draws.
  const std::vector<int> items{0, 1, 2};
  std::vector<int> hist(6, 0);
  for (std::uint64_t seed = 0; seed < 6000; ++seed) {
    RandomStream rng(seed);
    const auto [a, b] = permute_split(std::span<const int>(items), 3, 0, rng);
    std::vector<int> perm = a;
    int rank = 0;
    std::vector<int> sorted{0, 1, 2};
    while (sorted != perm) {
      std::next_permutation(sorted.begin(), sorted.end());
      ++rank;
    }
    ++hist[rank];
  }
  for (int c : hist) EXPECT_NEAR(c, 1000, 5 * std::sqrt(1000.0));
}

TEST(Qualifies, TwoTailedIsReciprocalInvariant) {
  Gen gen(42);
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational r(gen.size(1, 30), gen.size(1, 30));
    const Rational obs(gen.size(1, 30), gen.size(1, 30));
    EXPECT_EQ(qualifies(r, obs, Tail::kTwoTailedReciprocal),
              qualifies(r.reciprocal(), obs.reciprocal(), Tail::kTwoTailedReciprocal));
    EXPECT_EQ(qualifies(r, obs, Tail::kTwoTailedReciprocal),
              qualifies(r, obs.reciprocal(), Tail::kTwoTailedReciprocal));
    EXPECT_EQ(qualifies(r, obs, Tail::kOneSidedGreater), r >= obs);
  }
}

TEST(Qualifies, InclusiveAtTheBoundary) {
  const Rational obs(1773, 1601);
  EXPECT_TRUE(qualifies(obs, obs, Tail::kTwoTailedReciprocal));
  EXPECT_TRUE(qualifies(obs.reciprocal(), obs, Tail::kTwoTailedReciprocal));
  EXPECT_FALSE(qualifies(Rational(1), obs, Tail::kTwoTailedReciprocal));
  EXPECT_TRUE(qualifies(obs, obs, Tail::kOneSidedGreater));
  EXPECT_TRUE(qualifies(Rational::infinity(), obs, Tail::kOneSidedGreater));
  EXPECT_TRUE(qualifies(Rational(0), obs, Tail::kTwoTailedReciprocal));
}

TEST(EmpiricalP, Counting) {
  const std::vector<Rational> rs{Rational(1, 2), Rational(1), Rational(2), Rational(3)};
  EXPECT_DOUBLE_EQ(empirical_p(Rational(2), rs, Tail::kOneSidedGreater), 0.5);
  EXPECT_DOUBLE_EQ(empirical_p(Rational(2), rs, Tail::kTwoTailedReciprocal), 0.75);
  EXPECT_DOUBLE_EQ(empirical_p(Rational(2), rs, Tail::kOneSidedGreater, true), 0.6);
  const std::vector<double> ds{0.5, 1.0, 2.0, 3.0};
  EXPECT_DOUBLE_EQ(empirical_p(2.0, ds, Tail::kTwoTailedReciprocal), 0.75);
}

TEST(DegenerateRatio, Conventions) {
  FrechetSummary zero;
  zero.variance_numerator = 0;
  zero.variance_denominator = 4;
  FrechetSummary two;
  two.variance_numerator = 8;
  two.variance_denominator = 4;
  EXPECT_EQ(degenerate_safe_ratio(zero, zero), Rational(1));
  EXPECT_TRUE(degenerate_safe_ratio(two, zero).is_infinite());
  EXPECT_TRUE(degenerate_safe_ratio(zero, two).is_zero());
  EXPECT_EQ(degenerate_safe_ratio(two, two), Rational(1));
}

TEST(LinePermutationTest, IdenticalSamples) {
  const auto b = variant_codes("figure1_codes_variant_b");
  PermTestOptions opts;
  opts.seed = 9;
  opts.resamples = 500;
  const auto r = line_permutation_test(b, b, opts);
  EXPECT_EQ(r.observed_ratio, Rational(1));
  EXPECT_EQ(r.qualifying, 500u);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
  EXPECT_EQ(r.tail, Tail::kTwoTailedReciprocal);
}

TEST(LinePermutationTest, VariantListsGolden) {
  PermTestOptions opts;
  opts.seed = 20261014;
  opts.resamples = 2000;
  const auto r = line_permutation_test(variant_codes("figure1_codes_variant_a"),
                                       variant_codes("figure1_codes_variant_b"), opts);
  EXPECT_EQ(r.observed_ratio, Rational(59, 60));
  EXPECT_EQ(r.qualifying, 1952u);
  EXPECT_EQ(permtest_record(r),
            read_text_file(PROSODY_GOLDEN_DIR "/lines_ab_seed20261014.json"));
  EXPECT_EQ(ratios_csv(r), read_text_file(PROSODY_GOLDEN_DIR "/lines_ab_seed20261014_ratios.csv"));
}

TEST(LinePermutationTest, ResamplesMatchDirectRecomputation) {
  // Each resample redone from scratch: fresh distance matrices on the split
  // strings rather than index subsets of the pooled matrix.
  const auto a = variant_codes("figure1_codes_variant_a");
  const auto b = variant_codes("figure1_codes_variant_b");
  PermTestOptions opts;
  opts.seed = 77;
  opts.resamples = 200;
  const auto r = line_permutation_test(a, b, opts);

  std::vector<SymbolSequence> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::vector<std::size_t> labels(pooled.size());
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  for (std::size_t i = 0; i < opts.resamples; ++i) {
    RandomStream rng(child_seed(opts.seed, i));
    const auto [x, y] =
        permute_split(std::span<const std::size_t>(labels), a.size(), b.size(), rng);
    std::vector<SymbolSequence> sx, sy;
    for (auto k : x) sx.push_back(pooled[k]);
    for (auto k : y) sy.push_back(pooled[k]);
    const auto vx = frechet_summary(distance_matrix(sx));
    const auto vy = frechet_summary(distance_matrix(sy));
    ASSERT_EQ(r.resample_ratios[i], degenerate_safe_ratio(vy, vx)) << "resample " << i;
  }
}

TEST(LinePermutationTest, DeterministicAcrossThreadsAndSeeds) {
  Gen gen(43);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto a = gen.words(gen.size(1, 12), U"01", 10);
    const auto b = gen.words(gen.size(1, 12), U"01", 10);
    PermTestOptions opts;
    opts.seed = seed;
    opts.resamples = 64;
    const auto serial = line_permutation_test(a, b, opts);
    opts.threads = 3;
    EXPECT_EQ(line_permutation_test(a, b, opts), serial);
    EXPECT_EQ(serial.resample_ratios.size(), 64u);
    EXPECT_EQ(serial.n_resamples, 64u);
    EXPECT_EQ(serial.seed, seed);
  }
}

TEST(LinePermutationTest, SwappingSamplesInvertsObservedRatio) {
  const auto a = variant_codes("figure1_codes_variant_a");
  const auto b = variant_codes("figure1_codes_variant_b");
  PermTestOptions opts;
  opts.seed = 5;
  opts.resamples = 10;
  const auto ab = line_permutation_test(a, b, opts);
  const auto ba = line_permutation_test(b, a, opts);
  EXPECT_EQ(ab.observed_ratio.reciprocal(), ba.observed_ratio);
  EXPECT_EQ(ab.first, ba.second);
}

TEST(LinePermutationTest, NullRejectionRateNearNominal) {
  // Both samples from one population: a 5% level test should reject about
  // 5% of the time. 400 replications, bound at 3 standard errors.
  Gen gen(44);
  int rejected = 0;
  const int reps = 400;
  for (int rep = 0; rep < reps; ++rep) {
    const auto a = gen.words(15, U"abcd", 10);
    const auto b = gen.words(15, U"abcd", 10);
    PermTestOptions opts;
    opts.seed = static_cast<std::uint64_t>(rep);
    opts.resamples = 199;
    opts.plus_one = true;
    if (line_permutation_test(a, b, opts).p_value <= 0.05) ++rejected;
  }
  const double rate = static_cast<double>(rejected) / reps;
  EXPECT_NEAR(rate, 0.05, 3 * std::sqrt(0.05 * 0.95 / reps));
}

TEST(LinePermutationTest, BadInput) {
  const auto b = variant_codes("figure1_codes_variant_b");
  const std::vector<SymbolSequence> none;
  PermTestOptions opts;
  EXPECT_THROW(line_permutation_test(none, b, opts), DataError);
  opts.resamples = 0;
  EXPECT_THROW(line_permutation_test(b, b, opts), DataError);
}

class CountsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    auto [a, b] = CountTable::align(load_fixture("table1_sggk").counts(),
                                    load_fixture("table1_ppb").counts());
    sggk_ = std::make_unique<CountTable>(std::move(a));
    ppb_ = std::make_unique<CountTable>(std::move(b));
    d_ = std::make_unique<DistanceMatrix>(distance_matrix(sggk_->pattern_symbols()));
  }
  std::unique_ptr<CountTable> sggk_, ppb_;
  std::unique_ptr<DistanceMatrix> d_;
};

TEST_F(CountsTest, ObservedRatio) {
  PermTestOptions opts;
  opts.seed = 1;
  opts.resamples = 200;
  const auto r = counts_permutation_test(*sggk_, *ppb_, *d_, opts);
  EXPECT_EQ(r.tail, Tail::kOneSidedGreater);
  EXPECT_EQ(r.observed_ratio, Rational::quotient(Rational(1352636, 7003), Rational(71011, 2010)));
  EXPECT_NEAR(r.observed_ratio.to_double(), 5.47, 0.005);
}

TEST_F(CountsTest, IdenticalTables) {
  PermTestOptions opts;
  opts.seed = 2;
  opts.resamples = 100;
  opts.tail = Tail::kTwoTailedReciprocal;
  const auto r = counts_permutation_test(*sggk_, *sggk_, *d_, opts);
  EXPECT_EQ(r.observed_ratio, Rational(1));
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST_F(CountsTest, ResampledTablesConserveTotals) {
  // Conservation is visible through the summaries: each resample is split
  // into tables of the original totals, so denominators are fixed.
  PermTestOptions opts;
  opts.seed = 3;
  opts.resamples = 50;
  opts.threads = 4;
  const auto r = counts_permutation_test(*sggk_, *ppb_, *d_, opts);
  opts.threads = 1;
  EXPECT_EQ(counts_permutation_test(*sggk_, *ppb_, *d_, opts), r);
  EXPECT_EQ(r.first.variance_denominator, 2010u);
  EXPECT_EQ(r.second.variance_denominator, 7003u);
}

TEST_F(CountsTest, RejectsUnalignedTables) {
  PermTestOptions opts;
  auto rows = ppb_->rows();
  std::reverse(rows.begin(), rows.end());
  const CountTable reversed(rows);
  EXPECT_THROW(counts_permutation_test(*sggk_, reversed, *d_, opts), DataError);
  rows.pop_back();
  const CountTable shorter(rows);
  EXPECT_THROW(counts_permutation_test(*sggk_, shorter, *d_, opts), DataError);
  const auto small = distance_matrix(shorter.pattern_symbols());
  EXPECT_THROW(counts_permutation_test(*sggk_, *ppb_, small, opts), DataError);
}

}  // namespace
}  // namespace prosody

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


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "prosody/corpus.hpp"
#include "prosody/frechet.hpp"
#include "prosody/metric.hpp"
#include "prosody/permtest.hpp"

namespace {

using namespace prosody;

std::vector<SymbolSequence> RandomCodes(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(6, 14), bit(0, 1);
  std::vector<SymbolSequence> out(n);
  for (auto& s : out) {
    s.resize(static_cast<std::size_t>(len(rng)));
    for (auto& c : s) c = bit(rng) ? U'1' : U'0';
  }
  return out;
}

void BM_EditDistance(benchmark::State& state) {
  const auto codes = RandomCodes(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(edit_distance(codes[0], codes[1]));
}
BENCHMARK(BM_EditDistance);

void BM_DistanceMatrix(benchmark::State& state) {
  const auto codes = RandomCodes(static_cast<std::size_t>(state.range(0)), 2);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(codes, threads));
}
BENCHMARK(BM_DistanceMatrix)->Args({220, 1})->Args({440, 1})->Args({440, 4});

void BM_FrechetSummary(benchmark::State& state) {
  const auto d = distance_matrix(RandomCodes(440, 3));
  for (auto _ : state) benchmark::DoNotOptimize(frechet_summary(d));
}
BENCHMARK(BM_FrechetSummary);

void BM_LinePermutationTest(benchmark::State& state) {
  const auto a = RandomCodes(220, 4);
  const auto b = RandomCodes(220, 5);
  PermTestOptions opts;
  opts.seed = 1;
  opts.resamples = 100;
  for (auto _ : state) benchmark::DoNotOptimize(line_permutation_test(a, b, opts));
}
BENCHMARK(BM_LinePermutationTest)->Unit(benchmark::kMillisecond);

void BM_CountsPermutationTest(benchmark::State& state) {
  const auto [a, b] = CountTable::align(load_fixture("table1_sggk").counts(),
                                        load_fixture("table1_ppb").counts());
  const auto d = distance_matrix(a.pattern_symbols());
  PermTestOptions opts;
  opts.seed = 1;
  opts.resamples = 100;
  for (auto _ : state) benchmark::DoNotOptimize(counts_permutation_test(a, b, d, opts));
}
BENCHMARK(BM_CountsPermutationTest)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

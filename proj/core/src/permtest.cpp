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

#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace prosody {
namespace {

// Runs body(i) for i in [0, count), results stored by index, so output is
// the same for any thread count. Rethrows the first worker exception.
template <class Body>
void ForEachResample(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += threads) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

void Finish(PermTestResult& result, const PermTestOptions& options, Tail tail) {
  result.tail = tail;
  result.seed = options.seed;
  result.n_resamples = options.resamples;
  result.plus_one = options.plus_one;
  result.qualifying = static_cast<std::size_t>(
      std::count_if(result.resample_ratios.begin(), result.resample_ratios.end(),
                    [&](const Rational& r) { return qualifies(r, result.observed_ratio, tail); }));
  result.p_value = empirical_p(result.observed_ratio, result.resample_ratios, tail,
                               options.plus_one);
}

void CheckResamples(const PermTestOptions& options) {
  if (options.resamples == 0) throw DataError("resample count must be positive");
}

template <class T>
bool QualifiesImpl(const T& r, const T& observed, Tail tail) {
  if (tail == Tail::kOneSidedGreater) return r >= observed;
  T reciprocal;
  if constexpr (std::is_same_v<T, Rational>) {
    reciprocal = observed.reciprocal();
  } else {
    reciprocal = 1.0 / observed;
  }
  const T hi = std::max(observed, reciprocal);
  const T lo = std::min(observed, reciprocal);
  return r >= hi || r <= lo;
}

template <class T>
double EmpiricalPImpl(const T& observed, std::span<const T> resamples, Tail tail,
                      bool plus_one) {
  if (resamples.empty()) throw DataError("no resamples");
  const auto hits = static_cast<double>(std::count_if(
      resamples.begin(), resamples.end(),
      [&](const T& r) { return QualifiesImpl(r, observed, tail); }));
  const auto n = static_cast<double>(resamples.size());
  return plus_one ? (hits + 1.0) / (n + 1.0) : hits / n;
}

}  // namespace

std::string to_string(Tail tail) {
  switch (tail) {
    case Tail::kTwoTailedReciprocal:
      return "two";
    case Tail::kOneSidedGreater:
      return "greater";
  }
  return "unknown";
}

bool qualifies(const Rational& r, const Rational& observed, Tail tail) {
  return QualifiesImpl(r, observed, tail);
}

bool qualifies(double r, double observed, Tail tail) { return QualifiesImpl(r, observed, tail); }

double empirical_p(const Rational& observed, std::span<const Rational> resamples, Tail tail,
                   bool plus_one) {
  return EmpiricalPImpl(observed, resamples, tail, plus_one);
}

double empirical_p(double observed, std::span<const double> resamples, Tail tail,
                   bool plus_one) {
  return EmpiricalPImpl(observed, resamples, tail, plus_one);
}

Rational degenerate_safe_ratio(const FrechetSummary& numerator,
                               const FrechetSummary& denominator) {
  const bool zero_num = numerator.variance_numerator == 0;
  const bool zero_den = denominator.variance_numerator == 0;
  if (zero_num && zero_den) return Rational(1);
  if (zero_den) return Rational::infinity();
  return Rational::quotient(numerator.variance(), denominator.variance());
}

PermTestResult line_permutation_test(std::span<const SymbolSequence> first,
                                     std::span<const SymbolSequence> second,
                                     const PermTestOptions& options) {
  if (first.empty() || second.empty()) throw DataError("empty dataset");
  CheckResamples(options);
  const std::size_t n1 = first.size();
  const std::size_t n2 = second.size();

  std::vector<SymbolSequence> pooled(first.begin(), first.end());
  pooled.insert(pooled.end(), second.begin(), second.end());
  const DistanceMatrix d = distance_matrix(pooled, options.threads);

  std::vector<std::size_t> labels(n1 + n2);
  std::iota(labels.begin(), labels.end(), std::size_t{0});

  PermTestResult result;
  {
    const std::span<const std::size_t> all(labels);
    result.first = frechet_summary(d, all.first(n1), options.power);
    result.second = frechet_summary(d, all.subspan(n1), options.power);
    result.observed_ratio = degenerate_safe_ratio(result.second, result.first);
  }

  result.resample_ratios.resize(options.resamples);
  ForEachResample(options.resamples, options.threads, [&](std::size_t i) {
    RandomStream rng(child_seed(options.seed, i));
    const auto [a, b] = permute_split(std::span<const std::size_t>(labels), n1, n2, rng);
    const auto sa = frechet_summary(d, a, options.power);
    const auto sb = frechet_summary(d, b, options.power);
    result.resample_ratios[i] = degenerate_safe_ratio(sb, sa);
  });

  Finish(result, options, options.tail.value_or(Tail::kTwoTailedReciprocal));
  return result;
}

PermTestResult counts_permutation_test(const CountTable& first, const CountTable& second,
                                       const DistanceMatrix& d, const PermTestOptions& options) {
  CheckResamples(options);
  if (first.size() != second.size()) {
    throw DataError("count tables must share one pattern list; align them first");
  }
  for (std::size_t k = 0; k < first.size(); ++k) {
    if (first.rows()[k].pattern != second.rows()[k].pattern) {
      throw DataError("count tables differ at row " + std::to_string(k + 1) + " (\"" +
                      first.rows()[k].pattern.text() + "\" vs \"" +
                      second.rows()[k].pattern.text() + "\")");
    }
  }
  if (d.size() != first.size()) {
    throw DataError("distance matrix has " + std::to_string(d.size()) +
                    " rows but the count tables have " + std::to_string(first.size()));
  }

  const auto counts1 = first.counts();
  const auto counts2 = second.counts();
  std::vector<std::uint64_t> pooled_counts(counts1.size());
  std::vector<std::uint32_t> labels;
  labels.reserve(first.total() + second.total());
  for (std::size_t k = 0; k < counts1.size(); ++k) {
    pooled_counts[k] = counts1[k] + counts2[k];
    labels.insert(labels.end(), pooled_counts[k], static_cast<std::uint32_t>(k));
  }

  PermTestResult result;
  result.first = weighted_frechet(d, counts1, options.weighting, options.power);
  result.second = weighted_frechet(d, counts2, options.weighting, options.power);
  result.observed_ratio = degenerate_safe_ratio(result.second, result.first);

  const auto n1 = static_cast<std::size_t>(first.total());
  const auto n2 = static_cast<std::size_t>(second.total());
  result.resample_ratios.resize(options.resamples);
  ForEachResample(options.resamples, options.threads, [&](std::size_t i) {
    RandomStream rng(child_seed(options.seed, i));
    const auto [a, b] = permute_split(std::span<const std::uint32_t>(labels), n1, n2, rng);
    std::vector<std::uint64_t> ca(pooled_counts.size(), 0);
    for (const auto label : a) ++ca[label];
    std::vector<std::uint64_t> cb(pooled_counts.size());
    for (std::size_t k = 0; k < cb.size(); ++k) cb[k] = pooled_counts[k] - ca[k];
    const auto sa = weighted_frechet(d, ca, options.weighting, options.power);
    const auto sb = weighted_frechet(d, cb, options.weighting, options.power);
    result.resample_ratios[i] = degenerate_safe_ratio(sb, sa);
  });

  Finish(result, options, options.tail.value_or(Tail::kOneSidedGreater));
  return result;
}

}  // namespace prosody

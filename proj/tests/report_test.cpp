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


#include "prosody/report.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "prosody/corpus.hpp"
#include "prosody/frechet.hpp"
#include "prosody/permtest.hpp"
#include "support/testing.hpp"

namespace prosody {
namespace {

using testing::u32_all;

TEST(Report, FormatExact) {
  EXPECT_EQ(format_exact(Rational(59, 10)), "59/10 = 5.9");
  EXPECT_EQ(format_exact(Rational(6)), "6");
  EXPECT_EQ(format_exact(Rational(71011, 2010)), "71011/2010 = 35.3289");
  EXPECT_EQ(format_exact(Rational::infinity()), "inf");
}

TEST(Report, FrechetText) {
  const auto items = load_fixture("figure1_codes_variant_b").lines();
  const auto s = frechet_summary(load_fixture("figure2_matrix").matrix());
  EXPECT_EQ(frechet_report(s, items),
            "generalized mean (power 2)\n"
            "lines: 10\n"
            "minimal objective: 59\n"
            "variance: 59/10 = 5.9\n"
            "generalized mean indices: 9\n"
            "  [9] 010010100\n");
}

TEST(Report, FrechetRecord) {
  const auto items = load_fixture("figure1_codes_variant_b").lines();
  const auto s = frechet_summary(load_fixture("figure2_matrix").matrix());
  const auto j = nlohmann::json::parse(frechet_record(s, items));
  EXPECT_EQ(j["mean_indices"], nlohmann::json::array({9}));
  EXPECT_EQ(j["mean_items"][0], "010010100");
  EXPECT_EQ(j["variance_numerator"], 59);
  EXPECT_EQ(j["variance_denominator"], 10);
  EXPECT_DOUBLE_EQ(j["variance_value"].get<double>(), 5.9);
  EXPECT_EQ(j["power"], 2);
}

TEST(Report, PermtestRecordAndCsv) {
  PermTestOptions opts;
  opts.seed = 4;
  opts.resamples = 25;
  const auto b = u32_all(load_fixture("figure1_codes_variant_b").lines());
  const auto a = u32_all(load_fixture("figure1_codes_variant_a").lines());
  const auto r = line_permutation_test(a, b, opts);

  const auto j = nlohmann::json::parse(permtest_record(r));
  EXPECT_EQ(j["observed_exact"], "59/60");
  EXPECT_EQ(j["seed"], 4);
  EXPECT_EQ(j["n_resamples"], 25);
  EXPECT_EQ(j["tail"], "two_tailed_reciprocal");
  EXPECT_EQ(j["qualifying"].get<std::size_t>(), r.qualifying);
  EXPECT_EQ(j["first"]["variance_numerator"], 60);

  const auto csv = ratios_csv(r);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), 25u);
  const auto text = permtest_report(r);
  EXPECT_NE(text.find("observed ratio (second/first): 59/60 = 0.983333"), std::string::npos);
  EXPECT_NE(text.find("seed: 4\n"), std::string::npos);
}

TEST(Report, InfiniteRatiosPrintAsInf) {
  PermTestResult r;
  r.resample_ratios = {Rational::infinity(), Rational(1, 3)};
  EXPECT_EQ(ratios_csv(r), "inf\n0.33333333333333331\n");
}

}  // namespace
}  // namespace prosody

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

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "prosody/error.hpp"
#include "prosody/unicode.hpp"
#include "support/testing.hpp"

namespace prosody {
namespace {

using testing::Gen;
using testing::reference_edit_distance;
using testing::u32;

TEST(EditDistance, OldHalde) { EXPECT_EQ(edit_distance(u32("old"), u32("halde")), 3u); }

TEST(EditDistance, EmptyOperands) {
  EXPECT_EQ(edit_distance(u32(""), u32("")), 0u);
  EXPECT_EQ(edit_distance(u32(""), u32("0101")), 4u);
  EXPECT_EQ(edit_distance(u32("0101"), u32("")), 4u);
}

TEST(EditDistance, SmallCases) {
  EXPECT_EQ(edit_distance(u32("kitten"), u32("sitting")), 3u);
  EXPECT_EQ(edit_distance(u32("010010100"), u32("001101001")), 3u);
  EXPECT_EQ(edit_distance(u32("abc"), u32("abc")), 0u);
  EXPECT_EQ(edit_distance(u32("ab"), u32("ba")), 2u);
}

TEST(EditDistance, ComposedAndDecomposedSpellingsAgree) {
  const SymbolSequence composed = to_symbols("\xC3\xA9t\xC3\xA9");    // été, precomposed
  const SymbolSequence decomposed = to_symbols("e\xCC\x81te\xCC\x81");  // e + U+0301
  EXPECT_EQ(composed, decomposed);
  EXPECT_EQ(edit_distance(composed, decomposed), 0u);
  EXPECT_EQ(edit_distance(to_symbols("þat"), to_symbols("that")), 2u);
}

TEST(EditDistance, MatchesReferenceOnRandomPairs) {
  Gen gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = gen.word(U"abcd", 12);
    const auto t = gen.word(U"abcd", 12);
    ASSERT_EQ(edit_distance(s, t), reference_edit_distance(s, t))
        << to_utf8(s) << " vs " << to_utf8(t);
  }
}

TEST(EditDistance, LengthBounds) {
  Gen gen(12);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = gen.word(U"01", 15);
    const auto t = gen.word(U"01", 15);
    const auto d = edit_distance(s, t);
    const auto diff = s.size() > t.size() ? s.size() - t.size() : t.size() - s.size();
    EXPECT_GE(d, diff);
    EXPECT_LE(d, std::max(s.size(), t.size()));
  }
}

TEST(EditDistance, MetricAxiomsOnRandomTriples) {
  Gen gen(2026);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = gen.word(U"abcd", 12);
    const auto y = gen.word(U"abcd", 12);
    const auto z = gen.word(U"abcd", 12);
    const auto xy = edit_distance(x, y), yx = edit_distance(y, x);
    const auto yz = edit_distance(y, z), xz = edit_distance(x, z);
    if (edit_distance(x, x) != 0) ++failures;
    if ((xy == 0) != (x == y)) ++failures;
    if (xy != yx) ++failures;
    if (xz > xy + yz) ++failures;
  }
  EXPECT_EQ(failures, 0);
}

TEST(DistanceMatrix, BuildsSymmetricZeroDiagonal) {
  Gen gen(5);
  const auto items = gen.words(30, U"01", 10);
  const auto d = distance_matrix(items);
  ASSERT_EQ(d.size(), items.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(d(i, i), 0u);
    for (std::size_t j = 0; j < d.size(); ++j) {
      EXPECT_EQ(d(i, j), d(j, i));
      EXPECT_EQ(d(i, j), reference_edit_distance(items[i], items[j]));
    }
  }
}

TEST(DistanceMatrix, ThreadCountDoesNotChangeResult) {
  Gen gen(6);
  const auto items = gen.words(57, U"01", 14);
  const auto serial = distance_matrix(items, 1);
  for (unsigned threads : {2u, 3u, 8u, 64u}) EXPECT_EQ(distance_matrix(items, threads), serial);
}

TEST(DistanceMatrix, EmptyDatasetRejected) {
  std::vector<SymbolSequence> none;
  EXPECT_THROW(distance_matrix(none), DataError);
}

TEST(DistanceMatrix, SingleItem) {
  const std::vector<SymbolSequence> one{u32("0110")};
  const auto d = distance_matrix(one);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d(0, 0), 0u);
  EXPECT_EQ(d.max_entry(), 0u);
}

TEST(DistanceMatrix, CsvRoundTrip) {
  Gen gen(7);
  const auto d = distance_matrix(gen.words(12, U"01", 9));
  EXPECT_EQ(DistanceMatrix::from_csv(d.to_csv()), d);
}

TEST(DistanceMatrix, FromRowsChecksAxioms) {
  EXPECT_NO_THROW(DistanceMatrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_THROW(DistanceMatrix::from_rows({{0, 1}, {2, 0}}), ParseError);     // asymmetric
  EXPECT_THROW(DistanceMatrix::from_rows({{1, 1}, {1, 0}}), ParseError);     // diagonal
  EXPECT_THROW(DistanceMatrix::from_rows({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}),
               ParseError);                                                  // triangle
  EXPECT_THROW(DistanceMatrix::from_rows({{0, 1}, {1}}), ParseError);        // ragged
  EXPECT_THROW(DistanceMatrix::from_rows({}), DataError);
}

TEST(DistanceMatrix, CsvErrorsCarryPosition) {
  try {
    DistanceMatrix::from_csv("0,1\n1,x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
  try {
    DistanceMatrix::from_csv("0,1\n\n1,-1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);  // file line, blank lines counted
  }
}

}  // namespace
}  // namespace prosody

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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prosody/metric.hpp"

namespace prosody {

// Text PGM (P2), one pixel per cell, row-major, maxval 255. A cell of
// distance d is round(255 * (1 - d / d_max)): white at 0, darker with
// distance; an all-zero matrix is all white.
std::string heatmap_pgm(const DistanceMatrix& d);

struct HistogramBin {
  double left = 0;
  double right = 0;
  std::size_t count = 0;
};

// Equal-width bins over [min, max] of the finite values; the last bin is
// closed on the right. +inf lands in the last bin. A constant input yields a
// single bin. Throws DataError on empty input or zero bins.
std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bins);

// "bin_left,bin_right,count" per line, header included.
std::string histogram_csv(std::span<const HistogramBin> bins);

// Plain bar chart, decorative only.
std::string histogram_svg(std::span<const HistogramBin> bins, std::string_view title = {});

// One number per line ("inf" accepted). ParseError carries the line number.
std::vector<double> parse_values_csv(std::string_view text);

}  // namespace prosody

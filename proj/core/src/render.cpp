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

#include "prosody/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "prosody/error.hpp"

namespace prosody {
namespace {

std::string FormatNumber(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string EscapeXml(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string heatmap_pgm(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  const Distance d_max = d.max_entry();
  std::ostringstream out;
  out << "P2\n" << n << ' ' << n << "\n255\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int pixel = 255;
      if (d_max > 0) {
        // Integer round-half-up of 255 * (d_max - d) / d_max.
        const std::uint64_t num = 255ULL * (d_max - d(i, j));
        pixel = static_cast<int>((2 * num + d_max) / (2ULL * d_max));
      }
      if (j != 0) out << ' ';
      out << pixel;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bins) {
  if (values.empty()) throw DataError("histogram of no values");
  if (bins == 0) throw DataError("histogram needs at least one bin");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const double v : values) {
    if (std::isnan(v)) throw DataError("histogram value is NaN");
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!std::isfinite(lo)) {
    lo = 0;
    hi = 0;
  }
  if (hi == lo) bins = 1;

  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<HistogramBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].left = lo + width * static_cast<double>(b);
    out[b].right = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
  }
  for (const double v : values) {
    std::size_t b = 0;
    if (v == std::numeric_limits<double>::infinity() || v >= hi) {
      b = bins - 1;
    } else if (v > lo) {
      b = std::min(bins - 1, static_cast<std::size_t>((v - lo) / width));
    }
    ++out[b].count;
  }
  return out;
}

std::string histogram_csv(std::span<const HistogramBin> bins) {
  std::string out = "bin_left,bin_right,count\n";
  for (const auto& b : bins) {
    out += FormatNumber(b.left) + "," + FormatNumber(b.right) + "," + std::to_string(b.count) +
           "\n";
  }
  return out;
}

std::string histogram_svg(std::span<const HistogramBin> bins, std::string_view title) {
  constexpr double kWidth = 640, kHeight = 400, kMargin = 40;
  std::size_t peak = 1;
  for (const auto& b : bins) peak = std::max(peak, b.count);
  const double bar =
      (kWidth - 2 * kMargin) / static_cast<double>(std::max<std::size_t>(1, bins.size()));

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
        << EscapeXml(title) << "</text>\n";
  }
  for (std::size_t i = 0; i < bins.size(); ++i) {
    const double h = (kHeight - 2 * kMargin) * static_cast<double>(bins[i].count) /
                     static_cast<double>(peak);
    out << "<rect x=\"" << kMargin + bar * static_cast<double>(i) << "\" y=\""
        << kHeight - kMargin - h << "\" width=\"" << bar << "\" height=\"" << h
        << "\" fill=\"gray\" stroke=\"black\"/>\n";
  }
  if (!bins.empty()) {
    out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin / 2
        << "\" font-size=\"12\">" << FormatNumber(bins.front().left) << "</text>\n";
    out << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin / 2
        << "\" text-anchor=\"end\" font-size=\"12\">" << FormatNumber(bins.back().right)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<double> parse_values_csv(std::string_view text) {
  std::vector<double> out;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line == "inf" || line == "+inf") {
      out.push_back(std::numeric_limits<double>::infinity());
      continue;
    }
    char* end = nullptr;
    const double v = std::strtod(line.c_str(), &end);
    if (end != line.c_str() + line.size() || std::isnan(v)) {
      throw ParseError("not a number: '" + line + "'", number, 1);
    }
    out.push_back(v);
  }
  if (out.empty()) throw DataError("no values");
  return out;
}

}  // namespace prosody

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

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace prosody {
namespace {

using Json = nlohmann::ordered_json;

std::string Decimal(double x, const char* format) {
  if (std::isinf(x)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

Json Number(const Rational& r) {
  if (r.is_infinite()) return nullptr;
  return r.to_double();
}

std::string Label(const FrechetSummary& s) {
  return s.is_median() ? "generalized median" : "generalized mean";
}

std::string TailName(Tail t) {
  return t == Tail::kTwoTailedReciprocal ? "two_tailed_reciprocal" : "one_sided_greater";
}

void SummaryLines(std::ostringstream& out, const std::string& prefix, const FrechetSummary& s) {
  out << prefix << "variance: " << format_exact(s.variance()) << '\n';
  out << prefix << Label(s) << " indices:";
  for (const auto i : s.mean_indices) out << ' ' << i;
  out << '\n';
}

Json SummaryJson(const FrechetSummary& s, std::span<const std::string> items) {
  Json j;
  j["mean_indices"] = s.mean_indices;
  Json mean_items = Json::array();
  for (const auto i : s.mean_indices) {
    if (i < items.size()) mean_items.push_back(items[i]);
  }
  j["mean_items"] = mean_items;
  j["variance_numerator"] = s.variance_numerator;
  j["variance_denominator"] = s.variance_denominator;
  j["variance_value"] = s.variance_value();
  j["power"] = s.power;
  return j;
}

}  // namespace

std::string format_exact(const Rational& r) {
  if (r.is_infinite()) return "inf";
  const std::string decimal = Decimal(r.to_double(), "%.6g");
  if (r.denominator() == 1) return r.to_string();
  return r.to_string() + " = " + decimal;
}

std::string frechet_report(const FrechetSummary& s, std::span<const std::string> items) {
  std::ostringstream out;
  out << Label(s) << " (power " << s.power << ")\n";
  out << "lines: " << s.variance_denominator << '\n';
  out << "minimal objective: " << s.variance_numerator << '\n';
  SummaryLines(out, "", s);
  if (!items.empty()) {
    for (const auto i : s.mean_indices) {
      if (i < items.size()) out << "  [" << i << "] " << items[i] << '\n';
    }
  }
  return out.str();
}

std::string frechet_record(const FrechetSummary& s, std::span<const std::string> items) {
  return SummaryJson(s, items).dump() + "\n";
}

std::string permtest_report(const PermTestResult& r) {
  std::ostringstream out;
  out << "variance-ratio permutation test\n";
  out << "first sample\n";
  SummaryLines(out, "  ", r.first);
  out << "second sample\n";
  SummaryLines(out, "  ", r.second);
  out << "observed ratio (second/first): " << format_exact(r.observed_ratio) << '\n';
  out << "tail: " << TailName(r.tail) << '\n';
  out << "seed: " << r.seed << '\n';
  out << "resamples: " << r.n_resamples << '\n';
  out << "qualifying: " << r.qualifying << '\n';
  if (r.plus_one) {
    out << "p-value: (" << r.qualifying << "+1)/(" << r.n_resamples
        << "+1) = " << Decimal(r.p_value, "%.6g") << '\n';
  } else {
    out << "p-value: " << r.qualifying << '/' << r.n_resamples << " = "
        << Decimal(r.p_value, "%.6g") << '\n';
  }
  return out.str();
}

std::string permtest_record(const PermTestResult& r) {
  Json j;
  j["observed"] = Number(r.observed_ratio);
  j["observed_exact"] = r.observed_ratio.to_string();
  j["p_value"] = r.p_value;
  j["qualifying"] = r.qualifying;
  j["tail"] = TailName(r.tail);
  j["seed"] = r.seed;
  j["n_resamples"] = r.n_resamples;
  j["plus_one"] = r.plus_one;
  j["first"] = SummaryJson(r.first, {});
  j["second"] = SummaryJson(r.second, {});
  return j.dump() + "\n";
}

std::string ratios_csv(const PermTestResult& r) {
  std::string out;
  for (const auto& ratio : r.resample_ratios) {
    out += Decimal(ratio.to_double(), "%.17g");
    out += '\n';
  }
  return out;
}

}  // namespace prosody

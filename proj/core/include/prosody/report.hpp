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

// Text and JSON renderings of analysis results. Output is byte-for-byte
// deterministic: numbers print with fixed formats, JSON keys in fixed order.

#pragma once

#include <span>
#include <string>

#include "prosody/frechet.hpp"
#include "prosody/permtest.hpp"

namespace prosody {

// "59/10 = 5.9": exact fraction followed by a 6-significant-digit decimal.
std::string format_exact(const Rational& r);

// `items` echoes the candidate strings so the mean can be printed; it may be
// empty.
std::string frechet_report(const FrechetSummary& s, std::span<const std::string> items);
std::string frechet_record(const FrechetSummary& s, std::span<const std::string> items);

std::string permtest_report(const PermTestResult& r);
std::string permtest_record(const PermTestResult& r);

// One ratio per line in resample order, "%.17g" or "inf".
std::string ratios_csv(const PermTestResult& r);

}  // namespace prosody

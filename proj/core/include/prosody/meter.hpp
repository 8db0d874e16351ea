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

#include <string>
#include <string_view>

#include "prosody/unicode.hpp"

namespace prosody {

// Stressed-word meter notation such as "aa/ax": 'a' and 'b' are stressed
// words alliterating on two distinct sounds, 'x' a stressed non-alliterating
// word, '/' the caesura. Exactly one '/', with at least one letter on each
// side.
class MeterPattern {
 public:
  // Throws ParseError (column of the offending character) on invalid input.
  static MeterPattern parse(std::string_view text);

  const std::string& text() const noexcept { return text_; }
  SymbolSequence symbols() const { return SymbolSequence(text_.begin(), text_.end()); }

  // Letters before / after the caesura.
  std::string_view a_verse() const;
  std::string_view b_verse() const;

  friend bool operator==(const MeterPattern&, const MeterPattern&) = default;

 private:
  explicit MeterPattern(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

}  // namespace prosody

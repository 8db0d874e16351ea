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

#include "prosody/meter.hpp"

#include "prosody/error.hpp"

namespace prosody {

MeterPattern MeterPattern::parse(std::string_view text) {
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '/') {
      if (slash != std::string_view::npos) {
        throw ParseError("meter pattern has more than one caesura", 0, i + 1);
      }
      slash = i;
    } else if (c != 'a' && c != 'b' && c != 'x') {
      throw ParseError("invalid meter symbol '" + std::string(1, c) + "' in \"" +
                           std::string(text) + "\"",
                       0, i + 1);
    }
  }
  if (slash == std::string_view::npos) {
    throw ParseError("meter pattern \"" + std::string(text) + "\" has no caesura", 0, 0);
  }
  if (slash == 0 || slash + 1 == text.size()) {
    throw ParseError("meter pattern \"" + std::string(text) + "\" has an empty half-line", 0,
                     slash + 1);
  }
  return MeterPattern(std::string(text));
}

std::string_view MeterPattern::a_verse() const {
  return std::string_view(text_).substr(0, text_.find('/'));
}

std::string_view MeterPattern::b_verse() const {
  return std::string_view(text_).substr(text_.find('/') + 1);
}

}  // namespace prosody

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

namespace prosody {

// One atomic symbol is one Unicode scalar value after NFC normalization, so
// that precomposed and decomposed spellings of the same letter compare equal.
using Symbol = char32_t;
using SymbolSequence = std::u32string;

// Validates UTF-8 and returns the NFC-normalized scalar sequence.
// Throws DataError naming the byte offset of the first invalid sequence.
SymbolSequence to_symbols(std::string_view utf8);

// NFC + full lowercase.
SymbolSequence fold_case(std::u32string_view text);

std::string to_utf8(std::u32string_view text);

}  // namespace prosody

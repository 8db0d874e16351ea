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

#include "prosody/unicode.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <climits>

#include "prosody/error.hpp"

namespace prosody {
namespace {

const icu::Normalizer2& Nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || nfc == nullptr) {
    throw DataError(std::string("ICU NFC normalizer unavailable: ") + u_errorName(status));
  }
  return *nfc;
}

icu::UnicodeString Normalize(const icu::UnicodeString& text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = Nfc().normalize(text, status);
  if (U_FAILURE(status)) {
    throw DataError(std::string("NFC normalization failed: ") + u_errorName(status));
  }
  return out;
}

SymbolSequence ToScalars(const icu::UnicodeString& text) {
  SymbolSequence out;
  out.reserve(static_cast<std::size_t>(text.length()));
  for (int32_t i = 0; i < text.length(); i = text.moveIndex32(i, 1)) {
    out.push_back(static_cast<Symbol>(text.char32At(i)));
  }
  return out;
}

icu::UnicodeString FromScalars(std::u32string_view text) {
  if (text.size() > static_cast<std::size_t>(INT32_MAX)) throw DataError("text too long");
  return icu::UnicodeString::fromUTF32(reinterpret_cast<const UChar32*>(text.data()),
                                       static_cast<int32_t>(text.size()));
}

}  // namespace

SymbolSequence to_symbols(std::string_view utf8) {
  if (utf8.size() > static_cast<std::size_t>(INT32_MAX)) throw DataError("text too long");
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  for (int32_t i = 0; i < length;) {
    const int32_t start = i;
    UChar32 c = 0;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      throw DataError("invalid UTF-8 at byte " + std::to_string(start + 1));
    }
  }
  return ToScalars(Normalize(icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), length))));
}

SymbolSequence fold_case(std::u32string_view text) {
  icu::UnicodeString u = FromScalars(text);
  u.toLower(icu::Locale::getRoot());
  return ToScalars(Normalize(u));
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  FromScalars(text).toUTF8String(out);
  return out;
}

}  // namespace prosody

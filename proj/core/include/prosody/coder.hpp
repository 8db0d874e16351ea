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

// Alliteration coding of Middle English poetic lines.
//
// A line becomes a position string with one bit per word, 1 marking a word
// that carries the line's alliterating initial sound. Two codings exist:
//
//   Variant A  every word, stressed or not, whose initial sound matches.
//   Variant B  only stress-bearing words: function words never match, a
//              word may match through its stem after an unstressed prefix
//              (bi-fel), and the a-verse carries at most two lifts.
//
// Automatic coding is heuristic. Hand-marked lines (parse_annotated_line)
// are the authoritative input.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "prosody/unicode.hpp"

namespace prosody {

struct Token {
  std::string surface;       // word as written, punctuation included
  SymbolSequence normalized;  // NFC, lowercase, edge punctuation stripped
  bool is_caesura = false;
};

// Whitespace split; a standalone "/" is a caesura token; edge punctuation is
// stripped; tokens left empty are dropped.
std::vector<Token> tokenize(std::string_view line);

struct SoundClass {
  enum class Kind {
    kVowel, kB, kD, kF, kGHard, kJSoftG, kH, kK, kL, kM, kN, kP, kR, kS, kSh,
    kT, kTh, kV, kW, kY, kCluster,
  };

  Kind kind = Kind::kVowel;
  SymbolSequence cluster;  // letters, only for kCluster

  std::string name() const;
  friend bool operator==(const SoundClass&, const SoundClass&) = default;
};

struct SoundOptions {
  // Treat sp-/st-/sc- as sounds of their own rather than plain S.
  bool distinct_s_clusters = false;
};

// Initial sound of a normalized (lowercase NFC) word. Spelling rules:
// c and g (and yogh) are soft before e, i, y and hard elsewhere; sh/sch is
// SH, th/thorn/eth is TH, ph is F; clusters take their first sound (kn is
// K, wr is W); u/v and i/j are consonantal before a vowel and vocalic
// otherwise; y is Y before a vowel and a vowel before a consonant.
// Throws DataError naming a character that starts no known sound.
SoundClass initial_sound_class(std::u32string_view word, const SoundOptions& options = {});

// Function-word stop list and unstressed-prefix list.
class Lexicon {
 public:
  // Lists shipped in data/stopwords.txt and data/prefixes.txt.
  static const Lexicon& defaults();

  // One entry per line, '#' comments, blank lines ignored. A trailing '-' on
  // a prefix entry is dropped.
  static Lexicon from_text(std::string_view stop_words, std::string_view prefixes);

  // Default lists with either one replaced.
  static Lexicon with_overrides(std::optional<std::string_view> stop_words,
                                std::optional<std::string_view> prefixes);

  bool is_function_word(const SymbolSequence& word) const {
    return function_words_.contains(word);
  }
  const std::vector<SymbolSequence>& prefixes() const noexcept { return prefixes_; }

 private:
  std::unordered_set<SymbolSequence> function_words_;
  std::vector<SymbolSequence> prefixes_;
};

enum class Variant { kA, kB };

struct CoderOptions {
  const Lexicon* lexicon = nullptr;  // null: Lexicon::defaults()
  SoundOptions sound;
  // Variant B: most marks kept before the caesura; extra marks are cleared
  // from the left. 0 disables the cap.
  unsigned max_a_verse_lifts = 2;
};

// A line's coding over {'0','1'}, one symbol per non-caesura token.
class PositionString {
 public:
  PositionString() = default;
  explicit PositionString(const std::vector<bool>& marks);

  const SymbolSequence& symbols() const noexcept { return bits_; }
  std::string text() const { return std::string(bits_.begin(), bits_.end()); }
  std::size_t size() const noexcept { return bits_.size(); }

  friend bool operator==(const PositionString&, const PositionString&) = default;

 private:
  SymbolSequence bits_;
};

// The alliterating sound is the most frequent initial sound among the
// line's content words (all words if it has none), earliest first on ties.
// Throws DataError when the line has no words.
SoundClass alliterating_class(const std::vector<Token>& tokens, const CoderOptions& options = {});

PositionString auto_code_line(const std::vector<Token>& tokens, Variant variant,
                              const CoderOptions& options = {});

struct AnnotatedLine {
  std::vector<Token> tokens;
  std::vector<bool> marks;  // one per non-caesura token

  PositionString position_string() const { return PositionString(marks); }
};

// "In a *somer* *seson* / whan *softe* was the *sonne*": asterisks around a
// word mark it. Throws ParseError with the column of an unbalanced '*'.
AnnotatedLine parse_annotated_line(std::string_view text);

// Inverse of parse_annotated_line on canonical input (single spaces).
std::string render_annotated_line(const AnnotatedLine& line);

}  // namespace prosody

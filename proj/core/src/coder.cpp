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

#include "prosody/coder.hpp"

#include <unicode/uchar.h>

#include <algorithm>

#include "lexicon_data.hpp"
#include "prosody/error.hpp"

namespace prosody {
namespace {

bool IsSpace(Symbol c) { return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0; }

bool IsEdgePunctuation(Symbol c) {
  switch (c) {
    case U',': case U'.': case U';': case U':': case U'!': case U'?':
    case U'"': case U'\'': case U'(': case U')': case U'[': case U']':
    case U'‘': case U'’': case U'“': case U'”':
    case U'«': case U'»': case U'-': case U'\u2013': case U'\u2014':
      return true;
    default:
      return false;
  }
}

std::u32string_view StripEdges(std::u32string_view word) {
  while (!word.empty() && IsEdgePunctuation(word.front())) word.remove_prefix(1);
  while (!word.empty() && IsEdgePunctuation(word.back())) word.remove_suffix(1);
  return word;
}

struct RawWord {
  std::u32string_view text;
  std::size_t column;  // 1-based code point column
};

std::vector<RawWord> SplitWhitespace(std::u32string_view line) {
  std::vector<RawWord> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !IsSpace(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool IsCaesura(std::u32string_view word) {
  return !word.empty() && std::all_of(word.begin(), word.end(), [](Symbol c) { return c == U'/'; });
}

bool IsVowelLetter(Symbol c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'æ': case U'œ': case U'ø':
    case U'à': case U'á': case U'â': case U'ä':
    case U'è': case U'é': case U'ê': case U'ë':
    case U'ì': case U'í': case U'î': case U'ï':
    case U'ò': case U'ó': case U'ô': case U'ö':
    case U'ù': case U'ú': case U'û': case U'ü':
      return true;
    default:
      return false;
  }
}

bool IsFrontVowel(Symbol c) {
  return c == U'e' || c == U'i' || c == U'y' || c == U'é' || c == U'ê' || c == U'è';
}

using Kind = SoundClass::Kind;

SoundClass Simple(Kind k) { return SoundClass{k, {}}; }
SoundClass Cluster(std::u32string_view letters) {
  return SoundClass{Kind::kCluster, SymbolSequence(letters)};
}

std::vector<SymbolSequence> ParseList(std::string_view text, bool strip_dash) {
  std::vector<SymbolSequence> out;
  const SymbolSequence all = to_symbols(text);
  std::u32string_view rest(all);
  while (!rest.empty()) {
    const auto eol = rest.find(U'\n');
    std::u32string_view line = rest.substr(0, eol);
    rest = eol == std::u32string_view::npos ? std::u32string_view{} : rest.substr(eol + 1);
    if (const auto hash = line.find(U'#'); hash != std::u32string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && IsSpace(line.front())) line.remove_prefix(1);
    while (!line.empty() && IsSpace(line.back())) line.remove_suffix(1);
    if (strip_dash && !line.empty() && line.back() == U'-') line.remove_suffix(1);
    if (!line.empty()) out.push_back(fold_case(line));
  }
  return out;
}

const Lexicon& ResolveLexicon(const CoderOptions& options) {
  return options.lexicon != nullptr ? *options.lexicon : Lexicon::defaults();
}

}  // namespace

std::vector<Token> tokenize(std::string_view line) {
  const SymbolSequence symbols = to_symbols(line);
  std::vector<Token> out;
  for (const auto& raw : SplitWhitespace(symbols)) {
    if (IsCaesura(raw.text)) {
      out.push_back({"/", {}, true});
      continue;
    }
    const auto core = StripEdges(raw.text);
    if (core.empty()) continue;
    out.push_back({to_utf8(raw.text), fold_case(core), false});
  }
  return out;
}

std::string SoundClass::name() const {
  switch (kind) {
    case Kind::kVowel: return "VOWEL";
    case Kind::kB: return "B";
    case Kind::kD: return "D";
    case Kind::kF: return "F";
    case Kind::kGHard: return "G_HARD";
    case Kind::kJSoftG: return "J_SOFT_G";
    case Kind::kH: return "H";
    case Kind::kK: return "K";
    case Kind::kL: return "L";
    case Kind::kM: return "M";
    case Kind::kN: return "N";
    case Kind::kP: return "P";
    case Kind::kR: return "R";
    case Kind::kS: return "S";
    case Kind::kSh: return "SH";
    case Kind::kT: return "T";
    case Kind::kTh: return "TH";
    case Kind::kV: return "V";
    case Kind::kW: return "W";
    case Kind::kY: return "Y";
    case Kind::kCluster: return "CLUSTER(" + to_utf8(cluster) + ")";
  }
  return "?";
}

SoundClass initial_sound_class(std::u32string_view word, const SoundOptions& options) {
  if (word.empty()) throw DataError("cannot classify an empty word");
  const Symbol c = word[0];
  const Symbol next = word.size() > 1 ? word[1] : Symbol{0};
  const bool next_vowel = next != 0 && IsVowelLetter(next);

  if (IsVowelLetter(c) && c != U'i' && c != U'u') return Simple(Kind::kVowel);

  switch (c) {
    case U'b': return Simple(Kind::kB);
    case U'd': return Simple(Kind::kD);
    case U'f': return Simple(Kind::kF);
    case U'h': return Simple(Kind::kH);
    case U'k': case U'q': return Simple(Kind::kK);
    case U'l': return Simple(Kind::kL);
    case U'm': return Simple(Kind::kM);
    case U'n': return Simple(Kind::kN);
    case U'r': return Simple(Kind::kR);
    case U'w': return Simple(Kind::kW);
    case U'j': return Simple(Kind::kJSoftG);
    case U'þ': case U'ð': return Simple(Kind::kTh);
    case U'x': return Cluster(U"x");
    case U'z': return Cluster(U"z");
    case U'p':
      return next == U'h' ? Simple(Kind::kF) : Simple(Kind::kP);
    case U't':
      return next == U'h' ? Simple(Kind::kTh) : Simple(Kind::kT);
    case U'c':
      if (next == U'h') return Cluster(U"ch");
      return IsFrontVowel(next) ? Simple(Kind::kS) : Simple(Kind::kK);
    case U'g': case U'ȝ':
      return IsFrontVowel(next) ? Simple(Kind::kJSoftG) : Simple(Kind::kGHard);
    case U's':
      if (next == U'h' || (next == U'c' && word.size() > 2 && word[2] == U'h')) {
        return Simple(Kind::kSh);
      }
      if (options.distinct_s_clusters && (next == U'p' || next == U't' || next == U'c' ||
                                          next == U'k')) {
        return Cluster(word.substr(0, 2));
      }
      return Simple(Kind::kS);
    case U'i':
      return next_vowel ? Simple(Kind::kJSoftG) : Simple(Kind::kVowel);
    case U'u': case U'v':
      return next_vowel ? Simple(Kind::kV) : Simple(Kind::kVowel);
    case U'y':
      return next_vowel ? Simple(Kind::kY) : Simple(Kind::kVowel);
    default:
      break;
  }
  throw DataError("no initial-sound rule for character '" + to_utf8(word.substr(0, 1)) +
                  "' in \"" + to_utf8(word) + "\"");
}

const Lexicon& Lexicon::defaults() {
  static const Lexicon lexicon =
      Lexicon::from_text(detail::kDefaultStopWords, detail::kDefaultPrefixes);
  return lexicon;
}

Lexicon Lexicon::from_text(std::string_view stop_words, std::string_view prefixes) {
  Lexicon out;
  for (auto& w : ParseList(stop_words, false)) out.function_words_.insert(std::move(w));
  out.prefixes_ = ParseList(prefixes, true);
  // Longest prefix first so "for-" is tried before a shorter overlapping one.
  std::stable_sort(out.prefixes_.begin(), out.prefixes_.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

Lexicon Lexicon::with_overrides(std::optional<std::string_view> stop_words,
                                std::optional<std::string_view> prefixes) {
  return from_text(stop_words.value_or(detail::kDefaultStopWords),
                   prefixes.value_or(detail::kDefaultPrefixes));
}

PositionString::PositionString(const std::vector<bool>& marks) {
  bits_.reserve(marks.size());
  for (const bool m : marks) bits_.push_back(m ? U'1' : U'0');
}

SoundClass alliterating_class(const std::vector<Token>& tokens, const CoderOptions& options) {
  const Lexicon& lexicon = ResolveLexicon(options);
  std::vector<const Token*> words;
  for (const auto& t : tokens) {
    if (!t.is_caesura) words.push_back(&t);
  }
  if (words.empty()) throw DataError("line has no words");

  std::vector<const Token*> voters;
  for (const auto* w : words) {
    if (!lexicon.is_function_word(w->normalized)) voters.push_back(w);
  }
  if (voters.empty()) voters = words;

  // Classes in order of first occurrence with their counts.
  std::vector<std::pair<SoundClass, std::size_t>> tally;
  for (const auto* w : voters) {
    const SoundClass cls = initial_sound_class(w->normalized, options.sound);
    auto it = std::find_if(tally.begin(), tally.end(),
                           [&](const auto& entry) { return entry.first == cls; });
    if (it == tally.end()) {
      tally.emplace_back(cls, 1);
    } else {
      ++it->second;
    }
  }
  auto best = tally.begin();
  for (auto it = tally.begin(); it != tally.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

PositionString auto_code_line(const std::vector<Token>& tokens, Variant variant,
                              const CoderOptions& options) {
  const Lexicon& lexicon = ResolveLexicon(options);
  const SoundClass target = alliterating_class(tokens, options);

  std::vector<bool> marks;
  std::optional<std::size_t> a_verse_end;  // marks index where the b-verse starts
  for (const auto& t : tokens) {
    if (t.is_caesura) {
      if (!a_verse_end) a_verse_end = marks.size();
      continue;
    }
    const bool matches = initial_sound_class(t.normalized, options.sound) == target;
    if (variant == Variant::kA) {
      marks.push_back(matches);
      continue;
    }
    bool mark = false;
    if (!lexicon.is_function_word(t.normalized)) {
      mark = matches;
      for (const auto& prefix : lexicon.prefixes()) {
        if (mark) break;
        const auto& w = t.normalized;
        if (w.size() >= prefix.size() + 2 && w.compare(0, prefix.size(), prefix) == 0) {
          mark = initial_sound_class(std::u32string_view(w).substr(prefix.size()),
                                     options.sound) == target;
        }
      }
    }
    marks.push_back(mark);
  }

  if (variant == Variant::kB && a_verse_end && options.max_a_verse_lifts > 0) {
    auto lifts = static_cast<std::size_t>(
        std::count(marks.begin(), marks.begin() + static_cast<std::ptrdiff_t>(*a_verse_end), true));
    for (std::size_t i = 0; i < *a_verse_end && lifts > options.max_a_verse_lifts; ++i) {
      if (marks[i]) {
        marks[i] = false;
        --lifts;
      }
    }
  }
  return PositionString(marks);
}

AnnotatedLine parse_annotated_line(std::string_view text) {
  const SymbolSequence symbols = to_symbols(text);
  AnnotatedLine out;
  for (const auto& raw : SplitWhitespace(symbols)) {
    if (IsCaesura(raw.text)) {
      out.tokens.push_back({"/", {}, true});
      continue;
    }
    // Punctuation may sit outside the asterisks: "*werkes*,".
    std::size_t lead = 0;
    while (lead < raw.text.size() && IsEdgePunctuation(raw.text[lead])) ++lead;
    std::size_t tail = raw.text.size();
    while (tail > lead && IsEdgePunctuation(raw.text[tail - 1])) --tail;
    std::u32string_view core = raw.text.substr(lead, tail - lead);

    bool marked = false;
    const std::size_t first_star = core.find(U'*');
    if (first_star != std::u32string_view::npos) {
      const std::size_t column = raw.column + lead + first_star;
      const std::size_t last_star = core.rfind(U'*');
      const bool balanced = first_star == 0 && last_star == core.size() - 1 && core.size() > 2 &&
                            core.substr(1, core.size() - 2).find(U'*') == std::u32string_view::npos;
      if (!balanced) throw ParseError("unbalanced '*' in annotated line", 0, column);
      marked = true;
      core = core.substr(1, core.size() - 2);
    }
    const auto word = StripEdges(core);
    if (word.empty()) {
      if (marked) throw ParseError("empty marked word", 0, raw.column);
      continue;
    }
    SymbolSequence surface(raw.text.substr(0, lead));
    surface += core;
    surface += raw.text.substr(tail);
    out.tokens.push_back({to_utf8(surface), fold_case(word), false});
    out.marks.push_back(marked);
  }
  return out;
}

std::string render_annotated_line(const AnnotatedLine& line) {
  std::string out;
  std::size_t word = 0;
  for (const auto& t : line.tokens) {
    if (!out.empty()) out += ' ';
    if (t.is_caesura) {
      out += '/';
      continue;
    }
    if (word < line.marks.size() && line.marks[word]) {
      const SymbolSequence s = to_symbols(t.surface);
      std::size_t lead = 0;
      while (lead < s.size() && IsEdgePunctuation(s[lead])) ++lead;
      std::size_t tail = s.size();
      while (tail > lead && IsEdgePunctuation(s[tail - 1])) --tail;
      out += to_utf8(std::u32string_view(s).substr(0, lead));
      out += '*';
      out += to_utf8(std::u32string_view(s).substr(lead, tail - lead));
      out += '*';
      out += to_utf8(std::u32string_view(s).substr(tail));
    } else {
      out += t.surface;
    }
    ++word;
  }
  return out;
}

}  // namespace prosody

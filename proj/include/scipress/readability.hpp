// Copyright 2026 The SciPress Authors.
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

// Grade-level readability formulas: Flesch-Kincaid, Coleman-Liau,
// Dale-Chall and Gunning Fog. Lower is more readable.
//
// A "word" is any token with a letter or digit in it; standalone punctuation
// never counts. Syllables, letters, complex words and difficult words are
// taken from alphabetic words (at least one letter) only.

#ifndef SCIPRESS_READABILITY_HPP_
#define SCIPRESS_READABILITY_HPP_

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "scipress/error.hpp"
#include "scipress/text.hpp"

namespace scipress {

class FamiliarWordList {
 public:
  explicit FamiliarWordList(std::unordered_set<std::string> words)
      : words_(std::move(words)) {
    if (words_.empty()) throw Error(ErrorCode::kInvalidConfig, "empty list");
  }

  // The embedded Dale-Chall list (~3000 words).
  static const FamiliarWordList& Default() {
    static const FamiliarWordList list = Parse(
#include "scipress/detail/familiar_words.inc"
    );
    return list;
  }

  // One word per line; entries are lowercased.
  static FamiliarWordList FromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return Parse(ss.str());
  }

  static FamiliarWordList Parse(std::string_view text) {
    std::unordered_set<std::string> words;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      std::string_view line = text.substr(pos, nl - pos);
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.remove_suffix(1);
      }
      while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      if (!line.empty()) words.insert(Fold(line));
      pos = nl + 1;
    }
    return FamiliarWordList(std::move(words));
  }

  bool Contains(std::string_view lowercase_word) const {
    return words_.count(std::string(lowercase_word)) > 0;
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Maximal vowel groups (a e i o u y), minus one for a silent final "e"
// (an "e" after a consonant) unless the word ends in consonant + "le";
// never below 1. Only ASCII letters are considered.
inline std::size_t SyllableCount(std::string_view word) {
  std::string w;
  for (char c : Fold(word)) {
    if (c >= 'a' && c <= 'z') w.push_back(c);
  }
  if (w.empty()) return 1;
  auto vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' ||
           c == 'y';
  };
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : w) {
    const bool v = vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  const std::size_t n = w.size();
  if (n >= 2 && w[n - 1] == 'e' && !vowel(w[n - 2])) {
    const bool consonant_le = n >= 3 && w[n - 2] == 'l' && !vowel(w[n - 3]);
    if (!consonant_le && groups > 0) --groups;
  }
  return groups == 0 ? 1 : groups;
}

struct TextCounts {
  std::size_t sentences = 0;
  std::size_t words = 0;
  std::size_t letters = 0;
  std::size_t syllables = 0;
  std::size_t complex_words = 0;    // >= 3 syllables
  std::size_t difficult_words = 0;  // not on the familiar list
};

inline TextCounts CountText(const TokenizedText& text,
                            const FamiliarWordList* list = nullptr) {
  TextCounts c;
  c.sentences = text.sentence_count();
  for (const auto& s : text.sentences()) {
    for (const auto& tok : s.tokens) {
      if (!IsWordToken(tok)) continue;
      ++c.words;
      if (!HasLetter(tok)) continue;
      for (std::size_t i = 0; i < tok.size();) {
        auto d = utf8::Decode(tok, i);
        if (chars::IsLetter(d.cp)) ++c.letters;
        i += d.len;
      }
      const std::size_t syl = SyllableCount(tok);
      c.syllables += syl;
      if (syl >= 3) ++c.complex_words;
      if (list != nullptr && !list->Contains(Fold(tok))) ++c.difficult_words;
    }
  }
  if (c.words == 0) throw Error(ErrorCode::kNoWords, "");
  return c;
}

inline double Fkgl(const TextCounts& c) {
  const double w = static_cast<double>(c.words);
  return 0.39 * (w / static_cast<double>(c.sentences)) +
         11.8 * (static_cast<double>(c.syllables) / w) - 15.59;
}

inline double ColemanLiau(const TextCounts& c) {
  const double w = static_cast<double>(c.words);
  const double letters_per_100 = static_cast<double>(c.letters) * 100.0 / w;
  const double sentences_per_100 =
      static_cast<double>(c.sentences) * 100.0 / w;
  return 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8;
}

inline double DaleChall(const TextCounts& c) {
  const double w = static_cast<double>(c.words);
  const double pdw = static_cast<double>(c.difficult_words) * 100.0 / w;
  double score = 0.1579 * pdw + 0.0496 * (w / static_cast<double>(c.sentences));
  if (pdw > 5.0) score += 3.6365;
  return score;
}

inline double GunningFog(const TextCounts& c) {
  const double w = static_cast<double>(c.words);
  return 0.4 * (w / static_cast<double>(c.sentences) +
                100.0 * static_cast<double>(c.complex_words) / w);
}

inline double Fkgl(const TokenizedText& t) { return Fkgl(CountText(t)); }
inline double ColemanLiau(const TokenizedText& t) {
  return ColemanLiau(CountText(t));
}
inline double DaleChall(const TokenizedText& t, const FamiliarWordList& list) {
  return DaleChall(CountText(t, &list));
}
inline double GunningFog(const TokenizedText& t) {
  return GunningFog(CountText(t));
}

struct ReadabilityReport {
  double fkgl = 0;
  double cli = 0;
  double dcrs = 0;
  double gunning = 0;
  double average = 0;
};

inline ReadabilityReport MakeReadabilityReport(const TokenizedText& text,
                                               const FamiliarWordList& list) {
  const TextCounts c = CountText(text, &list);
  ReadabilityReport r;
  r.fkgl = Fkgl(c);
  r.cli = ColemanLiau(c);
  r.dcrs = DaleChall(c);
  r.gunning = GunningFog(c);
  r.average = (r.fkgl + r.cli + r.dcrs + r.gunning) / 4.0;
  return r;
}

// Macro-average: one report per document, then the mean of each field.
inline ReadabilityReport MacroAverage(
    const std::vector<ReadabilityReport>& reports) {
  if (reports.empty()) throw Error(ErrorCode::kEmptyCorpus, "readability");
  ReadabilityReport m;
  for (const auto& r : reports) {
    m.fkgl += r.fkgl;
    m.cli += r.cli;
    m.dcrs += r.dcrs;
    m.gunning += r.gunning;
  }
  const double n = static_cast<double>(reports.size());
  m.fkgl /= n;
  m.cli /= n;
  m.dcrs /= n;
  m.gunning /= n;
  m.average = (m.fkgl + m.cli + m.dcrs + m.gunning) / 4.0;
  return m;
}

}  // namespace scipress

#endif  // SCIPRESS_READABILITY_HPP_

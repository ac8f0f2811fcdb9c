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

// Word segmentation and sentence splitting.
//
// Words follow a reduced form of the Unicode word-boundary rules: runs of
// letters/digits, joined across an apostrophe or period between letters
// ("israel's", "e.g") and across a comma or period between digits
// ("13,000", "3.5"). Every other non-space code point is a token of its
// own. A small abbreviation list ("Dr.", "e.g.", "et al.", ...) absorbs the
// following period.
//
// Sentences end after a standalone [.?!] token, plus any closing quotes or
// brackets glued to it, when whitespace follows and the next token starts
// with an uppercase letter or an opening quote/bracket.
//
// Offsets are byte offsets into the UTF-8 `raw` string.

#ifndef SCIPRESS_TEXT_HPP_
#define SCIPRESS_TEXT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scipress/error.hpp"

namespace scipress {

namespace utf8 {

struct Decoded {
  char32_t cp;
  std::size_t len;
};

// Invalid sequences decode as U+FFFD with length 1 so that scanning always
// advances and spans stay inside `s`.
inline Decoded Decode(std::string_view s, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (pos + len > s.size()) return {0xFFFD, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  // Overlong forms and surrogates.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {0xFFFD, 1};
  }
  return {cp, len};
}

inline void Append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace utf8

namespace chars {

inline bool IsSpace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == 0x85 || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 ||
         c == 0x202F || c == 0x205F || c == 0x3000 || c == 0xFEFF;
}

inline bool IsAsciiDigit(char32_t c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiAlpha(char32_t c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool IsNonAsciiPunct(char32_t c) {
  if (c >= 0xA1 && c <= 0xBF) return c != 0xAA && c != 0xB5 && c != 0xBA;
  if (c == 0xD7 || c == 0xF7) return true;
  if (c >= 0x2010 && c <= 0x206F) return true;  // general punctuation
  if (c >= 0x20A0 && c <= 0x20CF) return true;  // currency
  if (c >= 0x2190 && c <= 0x23FF) return true;  // arrows, math, technical
  if (c >= 0x2500 && c <= 0x27BF) return true;  // box drawing .. dingbats
  if (c >= 0x2E00 && c <= 0x2E7F) return true;
  if (c >= 0x3001 && c <= 0x303F) return true;
  if (c >= 0xFE30 && c <= 0xFE4F) return true;
  if ((c >= 0xFF01 && c <= 0xFF0F) || (c >= 0xFF1A && c <= 0xFF20) ||
      (c >= 0xFF3B && c <= 0xFF40) || (c >= 0xFF5B && c <= 0xFF65)) {
    return true;
  }
  if (c >= 0x1F000 && c <= 0x1FAFF) return true;  // emoji, symbols
  return c == 0xFFFD;
}

// Letters, digits and marks. Outside ASCII anything that is neither space
// nor a known punctuation/symbol block counts as a word character.
inline bool IsWord(char32_t c) {
  if (c < 0x80) return IsAsciiAlpha(c) || IsAsciiDigit(c) || c == '_';
  if (c < 0xA0) return false;
  return !IsSpace(c) && !IsNonAsciiPunct(c);
}

inline bool IsLetter(char32_t c) {
  return IsWord(c) && !IsAsciiDigit(c) && c != '_';
}

inline bool IsUpper(char32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 0xC0 && c <= 0xDE && c != 0xD7) ||
         (c >= 0x391 && c <= 0x3A9) || (c >= 0x410 && c <= 0x42F);
}

inline char32_t ToLower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if ((c >= 0xC0 && c <= 0xDE && c != 0xD7) || (c >= 0x391 && c <= 0x3A9) ||
      (c >= 0x410 && c <= 0x42F)) {
    return c + 0x20;
  }
  return c;
}

}  // namespace chars

// Case-folded copy used by every metric; stored text keeps its casing.
inline std::string Fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    auto d = utf8::Decode(s, i);
    if (d.cp == 0xFFFD && d.len == 1) {
      out.push_back(s[i]);
    } else if (d.cp < 0x80) {
      out.push_back(static_cast<char>(chars::ToLower(d.cp)));
    } else {
      utf8::Append(out, chars::ToLower(d.cp));
    }
    i += d.len;
  }
  return out;
}

// A token containing at least one letter or digit. Standalone punctuation
// is excluded from every word count.
inline bool IsWordToken(std::string_view token) {
  for (std::size_t i = 0; i < token.size();) {
    auto d = utf8::Decode(token, i);
    if (d.cp != '_' && chars::IsWord(d.cp)) return true;
    i += d.len;
  }
  return false;
}

inline bool HasLetter(std::string_view token) {
  for (std::size_t i = 0; i < token.size();) {
    auto d = utf8::Decode(token, i);
    if (chars::IsLetter(d.cp)) return true;
    i += d.len;
  }
  return false;
}

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

struct Sentence {
  std::vector<std::string> tokens;
  std::vector<Span> token_spans;
};

class TokenizedText {
 public:
  TokenizedText() = default;
  TokenizedText(std::string raw, std::vector<Sentence> sentences)
      : raw_(std::move(raw)), sentences_(std::move(sentences)) {}

  const std::string& raw() const { return raw_; }
  const std::vector<Sentence>& sentences() const { return sentences_; }
  bool empty() const { return sentences_.empty(); }
  std::size_t sentence_count() const { return sentences_.size(); }

  std::size_t token_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences_) n += s.tokens.size();
    return n;
  }

  // Raw substring spanning the sentence's first to last token.
  std::string_view SentenceText(std::size_t i) const {
    const auto& spans = sentences_.at(i).token_spans;
    return std::string_view(raw_).substr(
        spans.front().start, spans.back().end - spans.front().start);
  }

  std::vector<std::string> Tokens() const {
    std::vector<std::string> out;
    out.reserve(token_count());
    for (const auto& s : sentences_) {
      out.insert(out.end(), s.tokens.begin(), s.tokens.end());
    }
    return out;
  }

  std::vector<std::string> FoldedTokens() const {
    std::vector<std::string> out;
    out.reserve(token_count());
    for (const auto& s : sentences_) {
      for (const auto& t : s.tokens) out.push_back(Fold(t));
    }
    return out;
  }

 private:
  std::string raw_;
  std::vector<Sentence> sentences_;
};

namespace detail {

inline bool IsOneOf(char32_t c, std::u32string_view set) {
  return set.find(c) != std::u32string_view::npos;
}

inline constexpr std::u32string_view kLetterJoiners = U"'.’";
inline constexpr std::u32string_view kDigitJoiners = U",.";
inline constexpr std::u32string_view kClosers = U"\"')]”’»";
inline constexpr std::u32string_view kOpeners = U"\"'([“‘«";

inline constexpr std::array<std::string_view, 8> kAbbreviations = {
    "Dr", "Prof", "Fig", "e.g", "i.e", "vs", "U.S", "No"};

struct RawToken {
  Span span;
  bool word = false;
};

inline std::vector<RawToken> Segment(std::string_view text) {
  std::vector<RawToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto d = utf8::Decode(text, i);
    if (chars::IsSpace(d.cp)) {
      i += d.len;
      continue;
    }
    if (!chars::IsWord(d.cp)) {
      out.push_back({{i, i + d.len}, false});
      i += d.len;
      continue;
    }
    const std::size_t start = i;
    char32_t prev = d.cp;
    i += d.len;
    while (i < text.size()) {
      auto cur = utf8::Decode(text, i);
      if (chars::IsWord(cur.cp)) {
        prev = cur.cp;
        i += cur.len;
        continue;
      }
      if (i + cur.len >= text.size()) break;
      auto next = utf8::Decode(text, i + cur.len);
      const bool letter_join = chars::IsLetter(prev) &&
                               chars::IsLetter(next.cp) &&
                               IsOneOf(cur.cp, kLetterJoiners);
      const bool digit_join = chars::IsAsciiDigit(prev) &&
                              chars::IsAsciiDigit(next.cp) &&
                              IsOneOf(cur.cp, kDigitJoiners);
      if (!letter_join && !digit_join) break;
      prev = next.cp;
      i += cur.len + next.len;
    }
    out.push_back({{start, i}, true});
  }
  return out;
}

// Glue a trailing period onto abbreviations listed above, and onto "al"
// when it follows "et".
inline void MergeAbbreviations(std::string_view text,
                               std::vector<RawToken>& tokens) {
  std::vector<RawToken> out;
  out.reserve(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    RawToken tok = tokens[k];
    if (tok.word && k + 1 < tokens.size() &&
        tokens[k + 1].span.start == tok.span.end &&
        text.substr(tokens[k + 1].span.start, 1) == ".") {
      std::string_view surface =
          text.substr(tok.span.start, tok.span.end - tok.span.start);
      bool abbrev = false;
      for (auto a : kAbbreviations) abbrev = abbrev || surface == a;
      if (!abbrev && surface == "al" && !out.empty()) {
        const auto& p = out.back().span;
        abbrev = text.substr(p.start, p.end - p.start) == "et";
      }
      if (abbrev) {
        tok.span.end += 1;
        ++k;
      }
    }
    out.push_back(tok);
  }
  tokens = std::move(out);
}

inline char32_t FirstCodePoint(std::string_view text, Span s) {
  return utf8::Decode(text, s.start).cp;
}

inline bool IsSingle(std::string_view text, Span s, std::u32string_view set) {
  auto d = utf8::Decode(text, s.start);
  return s.start + d.len == s.end && IsOneOf(d.cp, set);
}

}  // namespace detail

inline TokenizedText Tokenize(std::string text) {
  auto toks = detail::Segment(text);
  detail::MergeAbbreviations(text, toks);
  if (toks.empty()) throw Error(ErrorCode::kEmptyText, "no tokens");

  std::vector<Sentence> sentences;
  Sentence current;
  auto push = [&](std::size_t k) {
    const Span& s = toks[k].span;
    current.tokens.emplace_back(text.substr(s.start, s.end - s.start));
    current.token_spans.push_back(s);
  };
  for (std::size_t k = 0; k < toks.size(); ++k) {
    push(k);
    if (!detail::IsSingle(text, toks[k].span, U".?!")) continue;
    std::size_t j = k + 1;
    while (j < toks.size() && toks[j].span.start == toks[j - 1].span.end &&
           detail::IsSingle(text, toks[j].span, detail::kClosers)) {
      ++j;
    }
    if (j >= toks.size() || toks[j].span.start == toks[j - 1].span.end) {
      continue;
    }
    const bool opens =
        chars::IsUpper(detail::FirstCodePoint(text, toks[j].span)) ||
        detail::IsSingle(text, toks[j].span, detail::kOpeners);
    if (!opens) continue;
    for (std::size_t c = k + 1; c < j; ++c) push(c);
    k = j - 1;
    sentences.push_back(std::move(current));
    current = Sentence{};
  }
  if (!current.tokens.empty()) sentences.push_back(std::move(current));
  return TokenizedText(std::move(text), std::move(sentences));
}

// For optional fields: empty or whitespace-only text gives an empty value.
inline TokenizedText TokenizeOrEmpty(std::string text) {
  for (std::size_t i = 0; i < text.size();) {
    auto d = utf8::Decode(text, i);
    if (!chars::IsSpace(d.cp)) return Tokenize(std::move(text));
    i += d.len;
  }
  return TokenizedText(std::move(text), {});
}

// Joins texts with a blank line, keeping every sentence and shifting spans.
inline TokenizedText Concat(const std::vector<const TokenizedText*>& parts) {
  std::string raw;
  std::vector<Sentence> sentences;
  for (const TokenizedText* part : parts) {
    if (part == nullptr || part->empty()) continue;
    if (!raw.empty()) raw += "\n\n";
    const std::size_t offset = raw.size();
    raw += part->raw();
    for (Sentence s : part->sentences()) {
      for (auto& span : s.token_spans) {
        span.start += offset;
        span.end += offset;
      }
      sentences.push_back(std::move(s));
    }
  }
  return TokenizedText(std::move(raw), std::move(sentences));
}

// Raw text of sentences `indices` of `doc`, joined by single spaces.
inline std::string JoinSentences(const TokenizedText& doc,
                                 const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t i : indices) {
    if (!out.empty()) out += ' ';
    out += doc.SentenceText(i);
  }
  return out;
}

}  // namespace scipress

#endif  // SCIPRESS_TEXT_HPP_

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

#ifndef SCIPRESS_CORPUS_HPP_
#define SCIPRESS_CORPUS_HPP_

#include <array>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "scipress/error.hpp"
#include "scipress/text.hpp"

namespace scipress {

struct AuthorAffiliation {
  std::string name;
  std::string affiliation;  // may be empty
};

struct Section {
  std::string heading;
  TokenizedText body;
};

struct ScientificArticle {
  std::string id;
  std::string title;
  TokenizedText abstract;
  std::vector<Section> sections;
  std::vector<AuthorAffiliation> metadata;
  std::string source;
};

struct PressRelease {
  std::string title;
  TokenizedText summary;
  TokenizedText article;  // may be empty
  std::string writer_org;
  std::string date;
};

struct AlignedInstance {
  std::string id;
  ScientificArticle article;
  PressRelease press;
};

enum class Side { kPrSummary, kPrArticle, kSciBody, kSciAbstract };

inline std::string_view SideName(Side side) {
  switch (side) {
    case Side::kPrSummary: return "PR_SUMMARY";
    case Side::kPrArticle: return "PR_ARTICLE";
    case Side::kSciBody: return "SCI_BODY";
    case Side::kSciAbstract: return "SCI_ABSTRACT";
  }
  return "";
}

// Accepts "PR_SUMMARY" and the CLI spelling "pr-summary".
inline std::optional<Side> ParseSide(std::string_view s) {
  std::string norm;
  for (char c : s) {
    norm.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(
                                        static_cast<unsigned char>(c))));
  }
  for (Side side : {Side::kPrSummary, Side::kPrArticle, Side::kSciBody,
                    Side::kSciAbstract}) {
    if (norm == SideName(side)) return side;
  }
  return std::nullopt;
}

// The texts that make up one side of an instance. SCI_BODY is every section
// body in order.
inline std::vector<const TokenizedText*> SideTexts(const AlignedInstance& inst,
                                                   Side side) {
  switch (side) {
    case Side::kPrSummary: return {&inst.press.summary};
    case Side::kPrArticle: return {&inst.press.article};
    case Side::kSciAbstract: return {&inst.article.abstract};
    case Side::kSciBody: {
      std::vector<const TokenizedText*> out;
      for (const auto& s : inst.article.sections) out.push_back(&s.body);
      return out;
    }
  }
  return {};
}

inline TokenizedText SideText(const AlignedInstance& inst, Side side) {
  return Concat(SideTexts(inst, side));
}

// The section treated as the introduction: the first whose heading mentions
// "intro", else the first section.
inline const Section* Introduction(const ScientificArticle& article) {
  for (const auto& s : article.sections) {
    if (Fold(s.heading).find("intro") != std::string::npos) return &s;
  }
  return article.sections.empty() ? nullptr : &article.sections.front();
}

// Abstract followed by the introduction: what the summarizers read.
inline TokenizedText InputDocument(const ScientificArticle& article) {
  const Section* intro = Introduction(article);
  return Concat({&article.abstract, intro ? &intro->body : nullptr});
}

namespace detail {

inline const nlohmann::json& Require(const nlohmann::json& obj,
                                     std::string_view key,
                                     std::string_view where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw std::invalid_argument("missing \"" + std::string(where) +
                                std::string(key) + "\"");
  }
  return obj.at(key);
}

inline std::string OptString(const nlohmann::json& obj, std::string_view key) {
  if (!obj.is_object() || !obj.contains(key) || obj.at(key).is_null()) {
    return "";
  }
  return obj.at(key).get<std::string>();
}

inline std::string ReqString(const nlohmann::json& obj, std::string_view key,
                             std::string_view where) {
  const auto& v = Require(obj, key, where);
  if (!v.is_string()) {
    throw std::invalid_argument("\"" + std::string(where) + std::string(key) +
                                "\" is not a string");
  }
  return v.get<std::string>();
}

}  // namespace detail

inline AlignedInstance ParseInstance(const nlohmann::json& j) {
  AlignedInstance inst;
  inst.id = detail::ReqString(j, "id", "");
  if (inst.id.empty()) throw std::invalid_argument("empty \"id\"");
  const auto& a = detail::Require(j, "article", "");
  const auto& p = detail::Require(j, "press", "");

  inst.article.id = inst.id;
  inst.article.title = detail::OptString(a, "title");
  try {
    inst.article.abstract =
        Tokenize(detail::ReqString(a, "abstract", "article."));
  } catch (const Error&) {
    throw std::invalid_argument("empty \"article.abstract\"");
  }
  if (a.contains("sections")) {
    for (const auto& s : a.at("sections")) {
      inst.article.sections.push_back(
          {detail::OptString(s, "heading"),
           TokenizeOrEmpty(detail::OptString(s, "text"))});
    }
  }
  if (a.contains("authors")) {
    for (const auto& au : a.at("authors")) {
      AuthorAffiliation m{detail::ReqString(au, "name", "article.authors[]."),
                          detail::OptString(au, "affiliation")};
      if (m.name.empty()) throw std::invalid_argument("empty author name");
      inst.article.metadata.push_back(std::move(m));
    }
  }
  inst.article.source = detail::OptString(a, "source");

  inst.press.title = detail::OptString(p, "title");
  try {
    inst.press.summary = Tokenize(detail::ReqString(p, "summary", "press."));
  } catch (const Error&) {
    throw std::invalid_argument("empty \"press.summary\"");
  }
  inst.press.article = TokenizeOrEmpty(detail::OptString(p, "article"));
  inst.press.writer_org = detail::OptString(p, "writer_org");
  inst.press.date = detail::OptString(p, "date");
  return inst;
}

// One AlignedInstance per non-blank line. When `source_filter` is set only
// articles with that source tag are kept; line numbers in errors still
// refer to the file.
inline std::vector<AlignedInstance> LoadCorpus(
    const std::string& path,
    const std::optional<std::string>& source_filter = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::vector<AlignedInstance> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    AlignedInstance inst;
    try {
      inst = ParseInstance(nlohmann::json::parse(line));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kParseError, e.what(), lineno);
    }
    if (!seen.insert(inst.id).second) {
      throw Error(ErrorCode::kDuplicateId, inst.id, lineno);
    }
    if (source_filter && inst.article.source != *source_filter) continue;
    out.push_back(std::move(inst));
  }
  return out;
}

struct CorpusStats {
  std::size_t docs = 0;
  double mean_words = 0.0;
  double mean_sentences = 0.0;
};

// Tokens (punctuation included) and sentences per document.
inline CorpusStats ComputeCorpusStats(
    const std::vector<AlignedInstance>& corpus, Side side) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus_stats");
  std::size_t tokens = 0;
  std::size_t sentences = 0;
  for (const auto& inst : corpus) {
    for (const TokenizedText* t : SideTexts(inst, side)) {
      tokens += t->token_count();
      sentences += t->sentence_count();
    }
  }
  CorpusStats s;
  s.docs = corpus.size();
  s.mean_words = static_cast<double>(tokens) / static_cast<double>(s.docs);
  s.mean_sentences =
      static_cast<double>(sentences) / static_cast<double>(s.docs);
  return s;
}

enum class EntityType { kPerson, kOrg, kNumber, kLoc, kMisc };

inline constexpr std::array<EntityType, 5> kEntityTypes = {
    EntityType::kPerson, EntityType::kOrg, EntityType::kNumber,
    EntityType::kLoc, EntityType::kMisc};

inline std::string_view EntityTypeName(EntityType t) {
  switch (t) {
    case EntityType::kPerson: return "PERSON";
    case EntityType::kOrg: return "ORG";
    case EntityType::kNumber: return "NUMBER";
    case EntityType::kLoc: return "LOC";
    case EntityType::kMisc: return "MISC";
  }
  return "";
}

inline std::optional<EntityType> ParseEntityType(std::string_view s) {
  for (EntityType t : kEntityTypes) {
    if (s == EntityTypeName(t)) return t;
  }
  return std::nullopt;
}

struct EntityAnnotation {
  std::string instance_id;
  Side side = Side::kPrSummary;  // SCI_ABSTRACT or PR_SUMMARY
  Span span;
  EntityType etype = EntityType::kMisc;
};

inline std::vector<EntityAnnotation> LoadEntityAnnotations(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::vector<EntityAnnotation> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      EntityAnnotation a;
      a.instance_id = detail::ReqString(j, "instance_id", "");
      auto side = ParseSide(detail::ReqString(j, "side", ""));
      if (!side || (*side != Side::kSciAbstract && *side != Side::kPrSummary)) {
        throw std::invalid_argument("side must be SCI_ABSTRACT or PR_SUMMARY");
      }
      a.side = *side;
      a.span.start = detail::Require(j, "start", "").get<std::size_t>();
      a.span.end = detail::Require(j, "end", "").get<std::size_t>();
      auto et = ParseEntityType(detail::ReqString(j, "etype", ""));
      if (!et) throw std::invalid_argument("unknown etype");
      a.etype = *et;
      out.push_back(std::move(a));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kParseError, e.what(), lineno);
    }
  }
  return out;
}

// Mean entities per document for each type on `side`; absent types map to 0.
inline std::map<EntityType, double> EntityDistribution(
    const std::vector<AlignedInstance>& corpus,
    const std::vector<EntityAnnotation>& annotations, Side side) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "entities");
  std::unordered_map<std::string, const AlignedInstance*> by_id;
  for (const auto& inst : corpus) by_id.emplace(inst.id, &inst);

  std::map<EntityType, std::size_t> counts;
  for (EntityType t : kEntityTypes) counts[t] = 0;
  for (const auto& a : annotations) {
    auto it = by_id.find(a.instance_id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kDanglingAnnotation, a.instance_id);
    }
    const std::string& raw = a.side == Side::kSciAbstract
                                 ? it->second->article.abstract.raw()
                                 : it->second->press.summary.raw();
    if (a.span.start >= a.span.end || a.span.end > raw.size()) {
      throw Error(ErrorCode::kInvalidAnnotation,
                  a.instance_id + " [" + std::to_string(a.span.start) + "," +
                      std::to_string(a.span.end) + ")");
    }
    if (a.side == side) ++counts[a.etype];
  }
  std::map<EntityType, double> out;
  for (auto [t, c] : counts) {
    out[t] = static_cast<double>(c) / static_cast<double>(corpus.size());
  }
  return out;
}

}  // namespace scipress

#endif  // SCIPRESS_CORPUS_HPP_

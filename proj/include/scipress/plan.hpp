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

// Rhetorical plans and the source/target serialization used to train
// plan-then-summarize generators.
//
// Input:   [METADATA] {[AUTHOR] name | affiliation}* {[ROLE] sentence}*
// Target:  [PLAN] ROLE.. | ROLE.. | ... [SUMMARY] summary
//
// Sentences are written as their tokens joined by single spaces. An author
// with no affiliation is written "[AUTHOR] name".

#ifndef SCIPRESS_PLAN_HPP_
#define SCIPRESS_PLAN_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "scipress/corpus.hpp"
#include "scipress/error.hpp"
#include "scipress/text.hpp"

namespace scipress {

enum class Role { kAuthor, kBackground, kObjective, kMethods, kResults, kConclusions };

inline constexpr std::array<Role, 6> kRoles = {
    Role::kAuthor,  Role::kBackground, Role::kObjective,
    Role::kMethods, Role::kResults,    Role::kConclusions};

inline std::string_view RoleName(Role r) {
  switch (r) {
    case Role::kAuthor: return "AUTHOR";
    case Role::kBackground: return "BACKGROUND";
    case Role::kObjective: return "OBJECTIVE";
    case Role::kMethods: return "METHODS";
    case Role::kResults: return "RESULTS";
    case Role::kConclusions: return "CONCLUSIONS";
  }
  return "";
}

inline std::string RoleTag(Role r) { return "[" + std::string(RoleName(r)) + "]"; }

// Accepts "METHODS" or "[METHODS]".
inline std::optional<Role> ParseRole(std::string_view s) {
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    s = s.substr(1, s.size() - 2);
  }
  for (Role r : kRoles) {
    if (s == RoleName(r)) return r;
  }
  return std::nullopt;
}

using RoleGroup = std::vector<Role>;

class RhetoricalPlan {
 public:
  // Throws PlanMismatch when the plan is empty, a group is empty, or a group
  // repeats a role.
  explicit RhetoricalPlan(std::vector<RoleGroup> groups)
      : groups_(std::move(groups)) {
    if (groups_.empty()) throw Error(ErrorCode::kPlanMismatch, "no groups");
    for (const auto& g : groups_) {
      if (g.empty()) throw Error(ErrorCode::kPlanMismatch, "empty group");
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
          if (g[i] == g[j]) {
            throw Error(ErrorCode::kPlanMismatch,
                        "repeated role " + std::string(RoleName(g[i])));
          }
        }
      }
    }
  }

  const std::vector<RoleGroup>& groups() const { return groups_; }
  std::size_t size() const { return groups_.size(); }
  friend bool operator==(const RhetoricalPlan&, const RhetoricalPlan&) = default;

 private:
  std::vector<RoleGroup> groups_;
};

// The abstract + introduction body with one role per sentence.
struct LabeledDocument {
  TokenizedText body;
  std::vector<Role> sentence_labels;
};

namespace detail {

inline std::string SpacedTokens(const Sentence& s, bool lowercase) {
  std::string out;
  for (const auto& t : s.tokens) {
    if (!out.empty()) out.push_back(' ');
    out += lowercase ? Fold(t) : t;
  }
  return out;
}

inline std::string MaybeFold(std::string_view s, bool lowercase) {
  return lowercase ? Fold(s) : std::string(s);
}

}  // namespace detail

inline std::string SpacedText(const TokenizedText& text, bool lowercase = false) {
  std::string out;
  for (const auto& s : text.sentences()) {
    if (!out.empty()) out.push_back(' ');
    out += detail::SpacedTokens(s, lowercase);
  }
  return out;
}

inline std::string SerializeInput(const LabeledDocument& doc,
                                  const std::vector<AuthorAffiliation>& metadata,
                                  bool lowercase = false) {
  if (doc.sentence_labels.size() != doc.body.sentence_count()) {
    throw Error(ErrorCode::kLabelMismatch,
                std::to_string(doc.sentence_labels.size()) + " labels for " +
                    std::to_string(doc.body.sentence_count()) + " sentences");
  }
  std::string out = "[METADATA]";
  for (const auto& m : metadata) {
    out += " [AUTHOR] " + detail::MaybeFold(m.name, lowercase);
    if (!m.affiliation.empty()) {
      out += " | " + detail::MaybeFold(m.affiliation, lowercase);
    }
  }
  for (std::size_t i = 0; i < doc.body.sentence_count(); ++i) {
    out += " " + RoleTag(doc.sentence_labels[i]) + " " +
           detail::SpacedTokens(doc.body.sentences()[i], lowercase);
  }
  return out;
}

inline std::string SerializePlan(const RhetoricalPlan& plan) {
  std::string out = "[PLAN]";
  for (std::size_t g = 0; g < plan.size(); ++g) {
    if (g > 0) out += " |";
    for (Role r : plan.groups()[g]) out += " " + RoleTag(r);
  }
  return out;
}

inline std::string SerializeTarget(const RhetoricalPlan& plan,
                                   const TokenizedText& summary,
                                   bool lowercase = false) {
  if (plan.size() != summary.sentence_count()) {
    throw Error(ErrorCode::kPlanMismatch,
                std::to_string(plan.size()) + " groups for " +
                    std::to_string(summary.sentence_count()) + " sentences");
  }
  return SerializePlan(plan) + " [SUMMARY] " + SpacedText(summary, lowercase);
}

struct ParsedGeneration {
  std::optional<RhetoricalPlan> plan;
  std::string summary;
  bool structured = false;         // [PLAN] ... [SUMMARY] found
  std::size_t dropped_tokens = 0;  // unknown tokens inside the plan
  std::size_t dropped_groups = 0;  // groups left empty after dropping
};

inline std::string CollapseWhitespace(std::string_view s) {
  std::string out;
  bool pending = false;
  for (std::size_t i = 0; i < s.size();) {
    auto d = utf8::Decode(s, i);
    if (chars::IsSpace(d.cp)) {
      pending = !out.empty();
    } else {
      if (pending) out.push_back(' ');
      pending = false;
      out.append(s.substr(i, d.len));
    }
    i += d.len;
  }
  return out;
}

// Never throws. Without a [PLAN] ... [SUMMARY] structure the whole text is
// the summary.
inline ParsedGeneration ParseGenerated(std::string_view text) {
  ParsedGeneration out;
  const std::size_t plan_at = text.find("[PLAN]");
  const std::size_t sum_at = plan_at == std::string_view::npos
                                 ? std::string_view::npos
                                 : text.find("[SUMMARY]", plan_at);
  if (sum_at == std::string_view::npos) {
    out.summary = CollapseWhitespace(text);
    return out;
  }
  out.structured = true;
  out.summary = CollapseWhitespace(text.substr(sum_at + 9));

  std::string_view body = text.substr(plan_at + 6, sum_at - plan_at - 6);
  std::vector<RoleGroup> groups;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t bar = body.find('|', start);
    if (bar == std::string_view::npos) bar = body.size();
    std::istringstream words{std::string(body.substr(start, bar - start))};
    RoleGroup group;
    std::string w;
    while (words >> w) {
      auto role = ParseRole(w);
      if (!role || w.front() != '[') {
        ++out.dropped_tokens;
        continue;
      }
      if (std::find(group.begin(), group.end(), *role) == group.end()) {
        group.push_back(*role);
      }
    }
    if (group.empty()) {
      ++out.dropped_groups;
    } else {
      groups.push_back(std::move(group));
    }
    start = bar + 1;
  }
  if (!groups.empty()) out.plan.emplace(std::move(groups));
  return out;
}

// Cue-phrase lexicon, checked in this order after the author match.
inline const std::vector<std::pair<Role, std::vector<std::string_view>>>&
CueLexicon() {
  static const std::vector<std::pair<Role, std::vector<std::string_view>>> lex = {
      {Role::kObjective,
       {"we propose", "we present", "we introduce", "this paper",
        "in this work", "in this paper", "our goal", "we aim", "the aim of",
        "the goal of", "we set out"}},
      {Role::kResults,
       {"results show", "results indicate", "we show that", "we find",
        "we found", "achieved", "achieves", "outperform", "outperforms",
        "our results", "experiments show", "was able to", "were able to"}},
      {Role::kConclusions,
       {"we conclude", "we suggest", "suggests that", "suggest that",
        "in conclusion", "these findings", "could be used", "could help",
        "implications", "future work"}},
      {Role::kMethods,
       {"we use", "we used", "we train", "we trained", "we apply",
        "we collected", "by applying", "using a", "we design", "we designed",
        "we model"}},
  };
  return lex;
}

// Fallback labeler. Order: author/affiliation mention, cue phrases, then a
// position prior (first quartile BACKGROUND, last quartile CONCLUSIONS,
// METHODS between). `position` is the sentence index over the sentence
// count, in [0, 1).
inline Role HeuristicLabel(const Sentence& sentence, double position,
                           const std::vector<AuthorAffiliation>& metadata = {}) {
  std::string padded = " ";
  for (const auto& t : sentence.tokens) padded += Fold(t) + " ";
  auto mentions = [&](std::string_view phrase) {
    if (phrase.empty()) return false;
    const TokenizedText t = TokenizeOrEmpty(std::string(phrase));
    if (t.empty()) return false;
    std::string needle = " ";
    for (const auto& tok : t.FoldedTokens()) needle += tok + " ";
    return padded.find(needle) != std::string::npos;
  };
  for (const auto& m : metadata) {
    if (mentions(m.name) || mentions(m.affiliation)) return Role::kAuthor;
  }
  for (const auto& [role, cues] : CueLexicon()) {
    for (auto cue : cues) {
      if (padded.find(" " + std::string(cue) + " ") != std::string::npos) {
        return role;
      }
    }
  }
  if (position < 0.25) return Role::kBackground;
  if (position >= 0.75) return Role::kConclusions;
  return Role::kMethods;
}

inline std::vector<Role> HeuristicLabels(
    const TokenizedText& text, const std::vector<AuthorAffiliation>& metadata = {}) {
  std::vector<Role> out;
  const double n = static_cast<double>(text.sentence_count());
  for (std::size_t i = 0; i < text.sentence_count(); ++i) {
    out.push_back(HeuristicLabel(text.sentences()[i],
                                 static_cast<double>(i) / n, metadata));
  }
  return out;
}

// One group per summary sentence: [AUTHOR] first when the sentence mentions
// the metadata, then the sentence's content label.
inline RhetoricalPlan HeuristicPlan(const TokenizedText& summary,
                                    const std::vector<AuthorAffiliation>& metadata) {
  std::vector<RoleGroup> groups;
  const auto with_authors = HeuristicLabels(summary, metadata);
  const auto content = HeuristicLabels(summary);
  for (std::size_t i = 0; i < summary.sentence_count(); ++i) {
    RoleGroup g;
    if (with_authors[i] == Role::kAuthor) g.push_back(Role::kAuthor);
    if (content[i] != Role::kAuthor) g.push_back(content[i]);
    groups.push_back(std::move(g));
  }
  return RhetoricalPlan(std::move(groups));
}

struct PlanDistribution {
  std::size_t bins = 10;
  std::vector<double> bin_mass;               // total contributions per bin
  std::map<Role, std::vector<double>> share;  // per bin, sums to 1 over roles
};

// Each labeled sentence k of a length-L sequence adds one to bin
// floor(bins * k / L) for every role it carries. Bins with no mass stay 0.
inline PlanDistribution ComputePlanDistribution(
    const std::vector<std::vector<RoleGroup>>& sequences, std::size_t bins = 10) {
  if (sequences.empty()) throw Error(ErrorCode::kEmptyCorpus, "no label sequences");
  if (bins == 0) throw Error(ErrorCode::kInvalidConfig, "bins must be >= 1");
  PlanDistribution d;
  d.bins = bins;
  d.bin_mass.assign(bins, 0.0);
  std::map<Role, std::vector<double>> counts;
  for (Role r : kRoles) counts[r].assign(bins, 0.0);
  for (const auto& seq : sequences) {
    const std::size_t len = seq.size();
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t b = bins * k / len;
      for (Role r : seq[k]) {
        counts[r][b] += 1.0;
        d.bin_mass[b] += 1.0;
      }
    }
  }
  for (Role r : kRoles) {
    auto& v = d.share[r];
    v.assign(bins, 0.0);
    for (std::size_t b = 0; b < bins; ++b) {
      if (d.bin_mass[b] > 0.0) v[b] = counts[r][b] / d.bin_mass[b];
    }
  }
  return d;
}

inline PlanDistribution ComputePlanDistribution(
    const std::vector<std::vector<Role>>& sequences, std::size_t bins = 10) {
  std::vector<std::vector<RoleGroup>> grouped;
  for (const auto& seq : sequences) {
    std::vector<RoleGroup> g;
    for (Role r : seq) g.push_back({r});
    grouped.push_back(std::move(g));
  }
  return ComputePlanDistribution(grouped, bins);
}

// External labels: {"instance_id", "side", "labels": [ROLE | [ROLE, ...]]}.
// side is SCI_ABSTRACT, PR_SUMMARY or SCI_INPUT (abstract + introduction).
struct LabelRecord {
  std::string instance_id;
  std::string side;
  std::vector<RoleGroup> labels;
};

inline std::vector<LabelRecord> LoadLabels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::vector<LabelRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      LabelRecord rec;
      rec.instance_id = j.at("instance_id").get<std::string>();
      rec.side = j.at("side").get<std::string>();
      if (rec.side != "SCI_ABSTRACT" && rec.side != "PR_SUMMARY" &&
          rec.side != "SCI_INPUT") {
        throw std::invalid_argument("unknown side " + rec.side);
      }
      for (const auto& item : j.at("labels")) {
        RoleGroup g;
        auto add = [&](const nlohmann::json& v) {
          auto r = ParseRole(v.get<std::string>());
          if (!r) throw std::invalid_argument("unknown role " + v.dump());
          g.push_back(*r);
        };
        if (item.is_array()) {
          for (const auto& v : item) add(v);
        } else {
          add(item);
        }
        if (g.empty()) throw std::invalid_argument("empty label group");
        rec.labels.push_back(std::move(g));
      }
      out.push_back(std::move(rec));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kParseError, e.what(), lineno);
    }
  }
  return out;
}

}  // namespace scipress

#endif  // SCIPRESS_PLAN_HPP_

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

// Extractive comparison systems: Lead, Random, greedy ROUGE oracle,
// LexRank, TextRank and the verbatim abstract.

#ifndef SCIPRESS_BASELINES_HPP_
#define SCIPRESS_BASELINES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scipress/corpus.hpp"
#include "scipress/error.hpp"
#include "scipress/rng.hpp"
#include "scipress/rouge.hpp"
#include "scipress/text.hpp"

namespace scipress {

struct BaselineConfig {
  std::size_t n = 5;
  std::uint64_t seed = 0;
  double damping = 0.85;
  double convergence_eps = 1e-6;
  std::size_t max_iters = 200;
  bool oracle_pad = false;  // force exactly n oracle sentences

  void Validate() const {
    if (n < 1) throw Error(ErrorCode::kInvalidConfig, "n must be >= 1");
    if (!(damping > 0.0 && damping < 1.0)) {
      throw Error(ErrorCode::kInvalidConfig, "damping must be in (0, 1)");
    }
    if (!(convergence_eps > 0.0)) {
      throw Error(ErrorCode::kInvalidConfig, "convergence_eps must be > 0");
    }
  }
};

struct ExtractiveSummary {
  std::vector<std::size_t> sentence_indices;  // ascending
  std::string text;
  bool degenerate_graph = false;  // centrality fell back to lead
};

namespace detail {

inline void RequireDoc(const TokenizedText& doc) {
  if (doc.empty()) throw Error(ErrorCode::kEmptyDoc, "");
}

inline ExtractiveSummary MakeSummary(const TokenizedText& doc,
                                     std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  ExtractiveSummary s;
  s.text = JoinSentences(doc, indices);
  s.sentence_indices = std::move(indices);
  return s;
}

}  // namespace detail

inline ExtractiveSummary Lead(const TokenizedText& doc,
                              const BaselineConfig& cfg) {
  detail::RequireDoc(doc);
  std::vector<std::size_t> idx(std::min(cfg.n, doc.sentence_count()));
  std::iota(idx.begin(), idx.end(), 0);
  return detail::MakeSummary(doc, std::move(idx));
}

// Uniform sample of min(n, |doc|) sentences from SplitMix64(cfg.seed).
// Callers running a corpus pass a per-instance seed (see DeriveSeed).
inline ExtractiveSummary RandomBaseline(const TokenizedText& doc,
                                        const BaselineConfig& cfg) {
  detail::RequireDoc(doc);
  SplitMix64 rng(cfg.seed);
  return detail::MakeSummary(
      doc, SampleWithoutReplacement(doc.sentence_count(), cfg.n, rng));
}

// R1-f1 + R2-f1 of the selected sentences (in document order) against the
// reference. Tokens are folded once up front.
class OracleObjective {
 public:
  OracleObjective(const TokenizedText& doc, const TokenizedText& reference)
      : ref_(reference.FoldedTokens()) {
    for (const auto& s : doc.sentences()) {
      std::vector<std::string> toks;
      for (const auto& t : s.tokens) toks.push_back(Fold(t));
      sentences_.push_back(std::move(toks));
    }
  }

  double operator()(std::vector<std::size_t> selected) const {
    std::sort(selected.begin(), selected.end());
    std::vector<std::string> cand;
    for (std::size_t i : selected) {
      cand.insert(cand.end(), sentences_[i].begin(), sentences_[i].end());
    }
    double score = RougeN(cand, ref_, 1).f1;
    if (ref_.size() >= 2) score += RougeN(cand, ref_, 2).f1;
    return score;
  }

 private:
  std::vector<std::string> ref_;
  std::vector<std::vector<std::string>> sentences_;
};

// Greedy selection: add the sentence that maximizes the objective (lowest
// index on ties) until n sentences are chosen or nothing improves it
// (unless cfg.oracle_pad).
inline ExtractiveSummary ExtOracle(const TokenizedText& doc,
                                   const TokenizedText& reference,
                                   const BaselineConfig& cfg,
                                   std::vector<std::size_t>* trace = nullptr) {
  detail::RequireDoc(doc);
  if (reference.empty()) throw Error(ErrorCode::kEmptyReference, "");
  OracleObjective objective(doc, reference);
  std::vector<std::size_t> selected;
  std::vector<bool> used(doc.sentence_count(), false);
  double current = 0.0;
  const std::size_t limit = std::min(cfg.n, doc.sentence_count());
  while (selected.size() < limit) {
    std::optional<std::size_t> best;
    double best_score = 0.0;
    for (std::size_t i = 0; i < doc.sentence_count(); ++i) {
      if (used[i]) continue;
      auto trial = selected;
      trial.push_back(i);
      const double s = objective(trial);
      if (!best || s > best_score) {
        best = i;
        best_score = s;
      }
    }
    if (!best || (!cfg.oracle_pad && !(best_score > current))) break;
    selected.push_back(*best);
    used[*best] = true;
    current = best_score;
    if (trace) trace->push_back(*best);
  }
  return detail::MakeSummary(doc, std::move(selected));
}

// Stationary distribution of the damped random walk over a weighted
// sentence graph:
//   p <- (1 - d) / N + d * M^T p,   M = row-normalized weights,
// where a node without edges spreads its mass uniformly. Iterates from the
// uniform vector until the L1 change drops below eps or max_iters.
inline std::vector<double> PowerIteration(
    const std::vector<std::vector<double>>& weights, const BaselineConfig& cfg) {
  const std::size_t n = weights.size();
  const double nd = static_cast<double>(n);
  std::vector<double> row_sum(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (double w : weights[i]) row_sum[i] += w;
  }
  std::vector<double> p(n, 1.0 / nd), next(n);
  for (std::size_t it = 0; it < cfg.max_iters; ++it) {
    double dangling = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_sum[i] <= 0.0) dangling += p[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
      double incoming = dangling / nd;
      for (std::size_t i = 0; i < n; ++i) {
        if (row_sum[i] > 0.0) incoming += p[i] * weights[i][j] / row_sum[i];
      }
      next[j] = (1.0 - cfg.damping) / nd + cfg.damping * incoming;
    }
    double change = 0.0;
    for (std::size_t j = 0; j < n; ++j) change += std::fabs(next[j] - p[j]);
    std::swap(p, next);
    if (change < cfg.convergence_eps) break;
  }
  return p;
}

struct CentralityScores {
  std::vector<double> scores;
  bool degenerate = false;  // no two sentences share vocabulary
};

namespace detail {

// Case-folded word tokens (punctuation dropped) per sentence.
inline std::vector<std::vector<std::string>> WordsPerSentence(
    const TokenizedText& doc) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : doc.sentences()) {
    std::vector<std::string> w;
    for (const auto& t : s.tokens) {
      if (IsWordToken(t)) w.push_back(Fold(t));
    }
    out.push_back(std::move(w));
  }
  return out;
}

inline CentralityScores Rank(std::vector<std::vector<double>> sim,
                             const BaselineConfig& cfg) {
  CentralityScores out;
  const std::size_t n = sim.size();
  bool any_edge = false;
  for (std::size_t i = 0; i < n; ++i) {
    sim[i][i] = 0.0;
    for (std::size_t j = 0; j < n; ++j) any_edge = any_edge || sim[i][j] > 0.0;
  }
  out.degenerate = !any_edge;
  out.scores = PowerIteration(sim, cfg);
  return out;
}

inline ExtractiveSummary SelectTop(const TokenizedText& doc,
                                   const CentralityScores& c,
                                   const BaselineConfig& cfg) {
  if (c.degenerate) {
    auto s = Lead(doc, cfg);
    s.degenerate_graph = true;
    return s;
  }
  std::vector<std::size_t> order(c.scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c.scores[a] > c.scores[b];
  });
  order.resize(std::min(cfg.n, order.size()));
  return MakeSummary(doc, std::move(order));
}

}  // namespace detail

// TF-IDF cosine graph. IDF is computed over the document's own sentences as
// 1 + ln(N / df) so that terms shared by every sentence still carry weight.
// Self-similarity is excluded from the graph.
inline CentralityScores LexRankScores(const TokenizedText& doc,
                                      const BaselineConfig& cfg) {
  detail::RequireDoc(doc);
  cfg.Validate();
  const auto words = detail::WordsPerSentence(doc);
  const std::size_t n = words.size();
  std::unordered_map<std::string, double> df;
  for (const auto& w : words) {
    std::vector<std::string> uniq = w;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (const auto& t : uniq) df[t] += 1.0;
  }
  std::vector<std::unordered_map<std::string, double>> vec(n);
  std::vector<double> norm(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : words[i]) vec[i][t] += 1.0;
    for (auto& [t, v] : vec[i]) {
      v *= 1.0 + std::log(static_cast<double>(n) / df[t]);
      norm[i] += v * v;
    }
    norm[i] = std::sqrt(norm[i]);
  }
  std::vector<std::vector<double>> sim(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (norm[i] == 0.0 || norm[j] == 0.0) continue;
      double dot = 0.0;
      for (const auto& [t, v] : vec[i]) {
        auto it = vec[j].find(t);
        if (it != vec[j].end()) dot += v * it->second;
      }
      sim[i][j] = sim[j][i] = dot / (norm[i] * norm[j]);
    }
  }
  return detail::Rank(std::move(sim), cfg);
}

// sim(i, j) = |shared distinct words| / (ln|S_i| + ln|S_j|), zero when either
// sentence has at most one word.
inline double TextRankSimilarity(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b) {
  if (a.size() <= 1 || b.size() <= 1) return 0.0;
  std::vector<std::string> ua = a, ub = b;
  std::sort(ua.begin(), ua.end());
  ua.erase(std::unique(ua.begin(), ua.end()), ua.end());
  std::sort(ub.begin(), ub.end());
  ub.erase(std::unique(ub.begin(), ub.end()), ub.end());
  std::vector<std::string> shared;
  std::set_intersection(ua.begin(), ua.end(), ub.begin(), ub.end(),
                        std::back_inserter(shared));
  return static_cast<double>(shared.size()) /
         (std::log(static_cast<double>(a.size())) +
          std::log(static_cast<double>(b.size())));
}

inline CentralityScores TextRankScores(const TokenizedText& doc,
                                       const BaselineConfig& cfg) {
  detail::RequireDoc(doc);
  cfg.Validate();
  const auto words = detail::WordsPerSentence(doc);
  const std::size_t n = words.size();
  std::vector<std::vector<double>> sim(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sim[i][j] = sim[j][i] = TextRankSimilarity(words[i], words[j]);
    }
  }
  return detail::Rank(std::move(sim), cfg);
}

inline ExtractiveSummary LexRank(const TokenizedText& doc,
                                 const BaselineConfig& cfg) {
  return detail::SelectTop(doc, LexRankScores(doc, cfg), cfg);
}

inline ExtractiveSummary TextRank(const TokenizedText& doc,
                                  const BaselineConfig& cfg) {
  return detail::SelectTop(doc, TextRankScores(doc, cfg), cfg);
}

inline ExtractiveSummary AbstractBaseline(const AlignedInstance& instance) {
  const auto& abs = instance.article.abstract;
  std::vector<std::size_t> idx(abs.sentence_count());
  std::iota(idx.begin(), idx.end(), 0);
  ExtractiveSummary s;
  s.sentence_indices = std::move(idx);
  s.text = abs.raw();
  return s;
}

enum class BaselineSystem { kLead, kRandom, kOracle, kLexRank, kTextRank, kAbstract };

inline std::string_view BaselineName(BaselineSystem s) {
  switch (s) {
    case BaselineSystem::kLead: return "lead";
    case BaselineSystem::kRandom: return "random";
    case BaselineSystem::kOracle: return "oracle";
    case BaselineSystem::kLexRank: return "lexrank";
    case BaselineSystem::kTextRank: return "textrank";
    case BaselineSystem::kAbstract: return "abstract";
  }
  return "";
}

inline std::optional<BaselineSystem> ParseBaseline(std::string_view s) {
  for (auto b : {BaselineSystem::kLead, BaselineSystem::kRandom,
                 BaselineSystem::kOracle, BaselineSystem::kLexRank,
                 BaselineSystem::kTextRank, BaselineSystem::kAbstract}) {
    if (s == BaselineName(b)) return b;
  }
  return std::nullopt;
}

// Runs one system on one instance. The document is the abstract followed by
// the introduction; Random draws from DeriveSeed(cfg.seed, instance.id).
inline ExtractiveSummary RunBaseline(BaselineSystem system,
                                     const AlignedInstance& instance,
                                     const BaselineConfig& cfg) {
  if (system == BaselineSystem::kAbstract) return AbstractBaseline(instance);
  const TokenizedText doc = InputDocument(instance.article);
  switch (system) {
    case BaselineSystem::kLead: return Lead(doc, cfg);
    case BaselineSystem::kRandom: {
      BaselineConfig c = cfg;
      c.seed = DeriveSeed(cfg.seed, instance.id);
      return RandomBaseline(doc, c);
    }
    case BaselineSystem::kOracle:
      return ExtOracle(doc, instance.press.summary, cfg);
    case BaselineSystem::kLexRank: return LexRank(doc, cfg);
    case BaselineSystem::kTextRank: return TextRank(doc, cfg);
    case BaselineSystem::kAbstract: break;
  }
  return AbstractBaseline(instance);
}

}  // namespace scipress

#endif  // SCIPRESS_BASELINES_HPP_

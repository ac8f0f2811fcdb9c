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

// Press-release vs. scientific sentence classifier: multinomial Naive Bayes
// over case-folded unigram + bigram features with add-one smoothing.
//
//   log P(f | c) = log((count(f, c) + 1) / (total(c) + |V|))
//
// V is the feature vocabulary seen in training; unseen features are ignored
// at scoring time.

#ifndef SCIPRESS_STYLE_HPP_
#define SCIPRESS_STYLE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "scipress/error.hpp"
#include "scipress/rng.hpp"
#include "scipress/text.hpp"

namespace scipress {

using TokenSeq = std::vector<std::string>;

inline std::vector<std::string> StyleFeatures(const TokenSeq& sentence) {
  std::vector<std::string> f;
  f.reserve(sentence.size() * 2);
  std::vector<std::string> folded;
  folded.reserve(sentence.size());
  for (const auto& t : sentence) folded.push_back(Fold(t));
  for (const auto& t : folded) f.push_back(t);
  for (std::size_t i = 0; i + 1 < folded.size(); ++i) {
    f.push_back(folded[i] + " " + folded[i + 1]);
  }
  return f;
}

class StyleModel {
 public:
  enum Class { kPress = 0, kScientific = 1 };

  StyleModel() = default;

  // Counts are stored; probabilities are derived. `counts[f] = {press, sci}`.
  StyleModel(std::map<std::string, std::array<std::uint64_t, 2>> counts,
             std::array<std::uint64_t, 2> docs)
      : counts_(std::move(counts)), docs_(docs) {
    for (const auto& [f, c] : counts_) {
      totals_[0] += c[0];
      totals_[1] += c[1];
    }
  }

  std::size_t vocabulary_size() const { return counts_.size(); }
  const std::array<std::uint64_t, 2>& class_docs() const { return docs_; }

  double LogPrior(Class c) const {
    const double total = static_cast<double>(docs_[0] + docs_[1]);
    return std::log(static_cast<double>(docs_[c]) / total);
  }

  double LogLikelihood(const std::string& feature, Class c) const {
    auto it = counts_.find(feature);
    const double count = it == counts_.end() ? 0.0 : double(it->second[c]);
    return std::log((count + 1.0) /
                    (static_cast<double>(totals_[c]) +
                     static_cast<double>(counts_.size())));
  }

  // P(PRESS | sentence).
  double PressProbability(const TokenSeq& sentence) const {
    double lp = LogPrior(kPress);
    double ls = LogPrior(kScientific);
    for (const auto& f : StyleFeatures(sentence)) {
      if (!counts_.count(f)) continue;
      lp += LogLikelihood(f, kPress);
      ls += LogLikelihood(f, kScientific);
    }
    return 1.0 / (1.0 + std::exp(ls - lp));
  }

  nlohmann::json ToJson() const {
    nlohmann::json j;
    j["kind"] = "naive_bayes_unigram_bigram";
    j["docs"] = {docs_[0], docs_[1]};
    nlohmann::json feats = nlohmann::json::object();
    for (const auto& [f, c] : counts_) feats[f] = {c[0], c[1]};
    j["features"] = std::move(feats);
    return j;
  }

  static StyleModel FromJson(const nlohmann::json& j) {
    std::map<std::string, std::array<std::uint64_t, 2>> counts;
    for (const auto& [f, c] : j.at("features").items()) {
      counts[f] = {c.at(0).get<std::uint64_t>(), c.at(1).get<std::uint64_t>()};
    }
    return StyleModel(std::move(counts),
                      {j.at("docs").at(0).get<std::uint64_t>(),
                       j.at("docs").at(1).get<std::uint64_t>()});
  }

 private:
  std::map<std::string, std::array<std::uint64_t, 2>> counts_;
  std::array<std::uint64_t, 2> docs_{0, 0};
  std::array<std::uint64_t, 2> totals_{0, 0};
};

// The larger class is subsampled (seeded, without replacement) down to the
// size of the smaller one. Balanced input is used as is.
inline StyleModel TrainStyleModel(const std::vector<TokenSeq>& press,
                                  const std::vector<TokenSeq>& scientific,
                                  std::uint64_t seed) {
  if (press.empty() || scientific.empty()) {
    throw Error(ErrorCode::kEmptyClass,
                press.empty() ? "no press sentences" : "no scientific sentences");
  }
  const std::size_t k = std::min(press.size(), scientific.size());
  SplitMix64 rng(DeriveSeed(seed, "style-subsample"));
  auto pick = [&](const std::vector<TokenSeq>& v) {
    std::vector<std::size_t> idx;
    if (v.size() == k) {
      idx.resize(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    } else {
      idx = SampleWithoutReplacement(v.size(), k, rng);
    }
    return idx;
  };
  std::map<std::string, std::array<std::uint64_t, 2>> counts;
  auto add = [&](const std::vector<TokenSeq>& v, int cls) {
    for (std::size_t i : pick(v)) {
      for (const auto& f : StyleFeatures(v[i])) ++counts[f][cls];
    }
  };
  add(press, StyleModel::kPress);
  add(scientific, StyleModel::kScientific);
  return StyleModel(std::move(counts), {k, k});
}

// Mean over sentences of P(PRESS | sentence).
inline double StyleScore(const StyleModel& model, const TokenizedText& text) {
  if (text.empty()) throw Error(ErrorCode::kEmptySummary, "");
  double sum = 0.0;
  for (const auto& s : text.sentences()) sum += model.PressProbability(s.tokens);
  return sum / static_cast<double>(text.sentence_count());
}

}  // namespace scipress

#endif  // SCIPRESS_STYLE_HPP_

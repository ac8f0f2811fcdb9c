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

#include "scipress/baselines.hpp"

#include <gtest/gtest.h>

#include <map>

#include "scipress/analysis.hpp"
#include "reference.hpp"
#include "test_support.hpp"

namespace scipress {
namespace {

using Idx = std::vector<std::size_t>;
using reference::ExhaustiveStepwise;

TokenizedText Doc(std::size_t sentences) {
  std::string s;
  for (std::size_t i = 0; i < sentences; ++i) s += "Sentence number w" + std::to_string(i) + ". ";
  return Tokenize(s);
}

TEST(Lead, TakesFirstN) {
  BaselineConfig cfg;
  EXPECT_EQ(Lead(Doc(10), cfg).sentence_indices, (Idx{0, 1, 2, 3, 4}));
  EXPECT_EQ(Lead(Doc(3), cfg).sentence_indices, (Idx{0, 1, 2}));
  EXPECT_SCIPRESS_ERROR(Lead(TokenizedText(), cfg), ErrorCode::kEmptyDoc);
}

TEST(Random, ForcedAndDeterministic) {
  BaselineConfig cfg;
  cfg.seed = 17;
  EXPECT_EQ(RandomBaseline(Doc(5), cfg).sentence_indices, (Idx{0, 1, 2, 3, 4}));
  const auto a = RandomBaseline(Doc(12), cfg);
  EXPECT_EQ(a.sentence_indices, RandomBaseline(Doc(12), cfg).sentence_indices);
  EXPECT_EQ(a.sentence_indices.size(), 5u);
  EXPECT_TRUE(std::is_sorted(a.sentence_indices.begin(), a.sentence_indices.end()));
}

TEST(Oracle, PerfectSingleMatchStopsEarly) {
  const auto doc = Tokenize("Alpha beta. Gamma delta. Epsilon zeta. The cat sat on the mat. Eta theta.");
  Idx trace;
  const auto s = ExtOracle(doc, Tokenize("The cat sat on the mat."), BaselineConfig{}, &trace);
  EXPECT_EQ(s.sentence_indices, (Idx{3}));
  EXPECT_EQ(trace, (Idx{3}));
  EXPECT_SCIPRESS_ERROR(ExtOracle(doc, TokenizedText(), BaselineConfig{}), ErrorCode::kEmptyReference);
}

TEST(Oracle, PadForcesN) {
  const auto doc = Tokenize("Alpha beta. Gamma delta. The cat sat. Eta theta.");
  BaselineConfig cfg;
  cfg.n = 3;
  cfg.oracle_pad = true;
  EXPECT_EQ(ExtOracle(doc, Tokenize("The cat sat."), cfg).sentence_indices.size(), 3u);
}

TEST(Oracle, GreedyTraceEqualsExhaustiveStepwise) {
  SplitMix64 rng(5);
  const char* vocab[] = {"the", "cat", "sat", "dog", "ran", "on", "mat", "a", "red", "big"};
  for (int trial = 0; trial < 300; ++trial) {
    auto sentence = [&](std::size_t len) {
      std::string s = "X";
      for (std::size_t i = 0; i < len; ++i) s += std::string(" ") + vocab[rng.Below(10)];
      return s + ". ";
    };
    std::string d, r;
    const auto m = 1 + rng.Below(8);
    for (std::uint64_t i = 0; i < m; ++i) d += sentence(1 + rng.Below(6));
    for (std::uint64_t i = 0, k = 1 + rng.Below(3); i < k; ++i) r += sentence(1 + rng.Below(6));
    const auto doc = Tokenize(d);
    const auto ref = Tokenize(r);
    for (std::size_t n = 1; n <= 3; ++n) {
      BaselineConfig cfg;
      cfg.n = n;
      Idx trace;
      ExtOracle(doc, ref, cfg, &trace);
      ASSERT_EQ(trace, ExhaustiveStepwise(doc, ref, n)) << d << " | " << r;
    }
  }
}

TEST(Centrality, IdenticalSentencesAreUniform) {
  const auto doc = Tokenize("Cats eat fish. Cats eat fish. Cats eat fish.");
  BaselineConfig cfg;
  cfg.n = 2;
  for (const auto& c : {LexRankScores(doc, cfg), TextRankScores(doc, cfg)}) {
    ASSERT_EQ(c.scores.size(), 3u);
    for (double s : c.scores) EXPECT_NEAR(s, 1.0 / 3, 1e-6);
  }
  EXPECT_EQ(LexRank(doc, cfg).sentence_indices, (Idx{0, 1}));
  EXPECT_EQ(TextRank(doc, cfg).sentence_indices, (Idx{0, 1}));
}

TEST(Centrality, IsolatedSentenceRanksLast) {
  // Sentence 3 shares nothing; its mass spreads uniformly. Stationary point:
  // p3 = 0.05 / (1 - 0.85 / 3), p1 = p2 = (1 - p3) / 2.
  const auto doc = Tokenize("Red apples grow fast. Red apples grow slowly. Quantum zebra.");
  BaselineConfig cfg;
  cfg.convergence_eps = 1e-12;
  cfg.max_iters = 1000;
  const auto c = LexRankScores(doc, cfg);
  const double p3 = 0.05 / (1 - 0.85 / 3);
  EXPECT_NEAR(c.scores[2], p3, 1e-9);
  EXPECT_NEAR(c.scores[0], (1 - p3) / 2, 1e-9);
  EXPECT_NEAR(c.scores[0], 0.47, 0.005);
  EXPECT_NEAR(c.scores[2], 0.07, 0.005);
  cfg.n = 2;
  EXPECT_EQ(LexRank(doc, cfg).sentence_indices, (Idx{0, 1}));
  EXPECT_EQ(TextRank(doc, cfg).sentence_indices, (Idx{0, 1}));
}

TEST(Centrality, ScoresSumToOne) {
  const auto corpus = LoadCorpus(testing::DataPath("fixture_corpus.jsonl"));
  BaselineConfig cfg;
  for (const auto& inst : corpus) {
    const auto doc = InputDocument(inst.article);
    for (const auto& c : {LexRankScores(doc, cfg), TextRankScores(doc, cfg)}) {
      double sum = 0;
      for (double s : c.scores) sum += s;
      EXPECT_NEAR(sum, 1.0, 1e-9) << inst.id;
    }
  }
}

TEST(Centrality, DisjointVocabularyFallsBackToLead) {
  const auto doc = Tokenize("Alpha. Beta. Gamma. Delta.");
  BaselineConfig cfg;
  cfg.n = 2;
  const auto s = LexRank(doc, cfg);
  EXPECT_TRUE(s.degenerate_graph);
  EXPECT_EQ(s.sentence_indices, (Idx{0, 1}));
  EXPECT_TRUE(TextRank(doc, cfg).degenerate_graph);
}

TEST(Centrality, ConfigValidation) {
  BaselineConfig cfg;
  cfg.damping = 1.0;
  EXPECT_SCIPRESS_ERROR(LexRankScores(Doc(3), cfg), ErrorCode::kInvalidConfig);
  cfg = BaselineConfig{};
  cfg.n = 0;
  EXPECT_SCIPRESS_ERROR(cfg.Validate(), ErrorCode::kInvalidConfig);
}

TEST(Baselines, CorpusRunIndependentOfJobs) {
  const auto corpus = LoadCorpus(testing::DataPath("fixture_corpus.jsonl"));
  BaselineConfig cfg;
  cfg.seed = 9;
  for (auto sys : {BaselineSystem::kLead, BaselineSystem::kRandom, BaselineSystem::kOracle,
                   BaselineSystem::kLexRank, BaselineSystem::kTextRank, BaselineSystem::kAbstract}) {
    const auto one = RunBaselineOnCorpus(corpus, sys, cfg, 1);
    const auto many = RunBaselineOnCorpus(corpus, sys, cfg, 8);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(PredictionJson(one[i]), PredictionJson(many[i]));
    }
  }
}

TEST(Baselines, AbstractIsIdentity) {
  const auto inst = testing::MakeInstance("1", "One here. Two there.", "P.");
  EXPECT_EQ(RunBaseline(BaselineSystem::kAbstract, inst, BaselineConfig{}).text,
            "One here. Two there.");
}

TEST(Baselines, NamesRoundTrip) {
  for (auto sys : {BaselineSystem::kLead, BaselineSystem::kRandom, BaselineSystem::kOracle,
                   BaselineSystem::kLexRank, BaselineSystem::kTextRank, BaselineSystem::kAbstract}) {
    EXPECT_EQ(ParseBaseline(BaselineName(sys)), sys);
  }
  EXPECT_FALSE(ParseBaseline("bart").has_value());
}

TEST(Evaluate, MissingAndUnknownPredictions) {
  const std::vector<AlignedInstance> c = {testing::MakeInstance("a", "X y.", "X y."),
                                          testing::MakeInstance("b", "Z w.", "Z w.")};
  const auto style = TrainStyleOnCorpus(c, 1);
  EXPECT_SCIPRESS_ERROR(EvaluateSystem(c, "s", {{"a", "X y."}}, style, 1),
                        ErrorCode::kMissingPrediction);
  EXPECT_SCIPRESS_ERROR(EvaluateSystem(c, "s", {{"a", "X."}, {"b", "Z."}, {"q", "Q."}}, style, 1),
                        ErrorCode::kDanglingAnnotation);
  const auto e = EvaluateSystem(c, "s", {{"a", "X y."}, {"b", "Z w."}}, style, 1);
  EXPECT_EQ(e.r1, 1.0);
  EXPECT_EQ(e.rl, 1.0);
}

}  // namespace
}  // namespace scipress

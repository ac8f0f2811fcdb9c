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

#include "scipress/bws.hpp"

#include <gtest/gtest.h>

#include <fstream>

#include "test_support.hpp"

namespace scipress {
namespace {

std::vector<AlignedInstance> Sample(std::size_t n) {
  std::vector<AlignedInstance> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(testing::MakeInstance("i" + std::to_string(i), "Abstract text.", "Summary.",
                                        "Intro text."));
  }
  return out;
}

Predictions Preds(const std::vector<AlignedInstance>& s, const std::vector<std::string>& systems) {
  Predictions p;
  for (const auto& sys : systems) {
    for (const auto& inst : s) {
      p[sys][inst.id] = "Output " + std::to_string(p[sys].size()) + " for " + inst.id + ".";
    }
  }
  return p;
}

Selection Sel(SlotSet best, SlotSet worst) { return {std::move(best), std::move(worst)}; }

BwsJudgment Uniform(const std::string& task, const std::string& ann, Selection s) {
  BwsJudgment j{task, ann, {}, "2026-01-01T00:00:00Z"};
  for (Dimension d : kDimensions) j.selections[d] = s;
  return j;
}

TEST(MakeTasks, ThirtyTasksThreeSlots) {
  const std::vector<std::string> systems = {"bart", "bart_plan", "lead"};
  const auto s = Sample(30);
  const auto tasks = MakeTasks(s, Preds(s, systems), systems, 7);
  ASSERT_EQ(tasks.size(), 30u);
  bool varied = false;
  for (const auto& t : tasks) {
    std::set<std::string> seen;
    for (const auto& c : t.candidates) seen.insert(c.system);
    EXPECT_EQ(seen.size(), 3u);
    EXPECT_EQ(t.task_id, "task-" + t.instance_id);
    varied = varied || t.candidates[0].system != tasks[0].candidates[0].system;
    EXPECT_EQ(t.ToPublicJson().dump().find("bart_plan"), std::string::npos);
  }
  EXPECT_TRUE(varied);
  const auto again = MakeTasks(s, Preds(s, systems), systems, 7);
  for (std::size_t i = 0; i < tasks.size(); ++i) EXPECT_EQ(tasks[i].ToJson(), again[i].ToJson());
}

TEST(MakeTasks, SystemCountAndMissingOutput) {
  const auto s = Sample(2);
  EXPECT_SCIPRESS_ERROR(MakeTasks(s, Preds(s, {"a", "b"}), {"a", "b"}, 1),
                        ErrorCode::kMissingPrediction);
  EXPECT_SCIPRESS_ERROR(MakeTasks(s, Preds(s, {"a", "b", "c", "d"}), {"a", "b", "c", "d"}, 1),
                        ErrorCode::kInvalidConfig);
  auto p = Preds(s, {"a", "b", "c"});
  p["c"].erase("i1");
  EXPECT_SCIPRESS_ERROR(MakeTasks(s, p, {"a", "b", "c"}, 1), ErrorCode::kMissingPrediction);
}

TEST(TaskSet, JsonRoundTripAndDuplicates) {
  const auto s = Sample(3);
  const auto tasks = MakeTasks(s, Preds(s, {"a", "b", "c"}), {"a", "b", "c"}, 1);
  const auto dir = testing::ScratchDir("taskset");
  SaveTasks((dir / "t.jsonl").string(), tasks);
  const auto set = LoadTasks((dir / "t.jsonl").string());
  ASSERT_EQ(set.tasks().size(), 3u);
  EXPECT_EQ(set.tasks()[2].ToJson(), tasks[2].ToJson());
  EXPECT_NE(set.Find("task-i1"), nullptr);
  EXPECT_EQ(set.Find("task-zz"), nullptr);
  EXPECT_SCIPRESS_ERROR(TaskSet({tasks[0], tasks[0]}), ErrorCode::kDuplicateId);
}

TEST(Judgment, TieRules) {
  EXPECT_NO_THROW(Uniform("t", "a", Sel({0}, {1})).Validate());
  EXPECT_NO_THROW(Uniform("t", "a", Sel({0, 1}, {2})).Validate());
  EXPECT_NO_THROW(Uniform("t", "a", Sel({0, 1, 2}, {0, 1, 2})).Validate());
  EXPECT_SCIPRESS_ERROR(Uniform("t", "a", Sel({0}, {0})).Validate(), ErrorCode::kInvalidSelection);
  EXPECT_SCIPRESS_ERROR(Uniform("t", "a", Sel({0, 1}, {1, 2})).Validate(),
                        ErrorCode::kInvalidSelection);
  EXPECT_SCIPRESS_ERROR(Uniform("t", "a", Sel({}, {1})).Validate(), ErrorCode::kInvalidSelection);
  auto partial = Uniform("t", "a", Sel({0}, {1}));
  partial.selections.erase(Dimension::kStyle);
  EXPECT_SCIPRESS_ERROR(partial.Validate(), ErrorCode::kInvalidSelection);
}

TEST(Judgment, JsonRoundTripAndMalformed) {
  const auto j = Uniform("t", "a", Sel({0, 2}, {1}));
  EXPECT_EQ(BwsJudgment::FromJson(j.ToJson()), j);
  auto bad = j.ToJson();
  bad["selections"]["STYLE"]["best"] = {"D"};
  EXPECT_SCIPRESS_ERROR(BwsJudgment::FromJson(bad), ErrorCode::kInvalidSelection);
  EXPECT_SCIPRESS_ERROR(BwsJudgment::FromJson(nlohmann::json{{"task_id", 3}}),
                        ErrorCode::kInvalidSelection);
}

TEST(JudgmentStore, StoresReadsBackAndReplaces) {
  const auto s = Sample(2);
  const TaskSet tasks(MakeTasks(s, Preds(s, {"a", "b", "c"}), {"a", "b", "c"}, 1));
  const auto dir = testing::ScratchDir("store");
  const auto path = (dir / "j.jsonl").string();
  const auto j1 = Uniform("task-i0", "ann", Sel({0}, {1}));
  const auto j2 = Uniform("task-i0", "ann", Sel({2}, {1}));
  {
    JudgmentStore store(path);
    EXPECT_FALSE(store.Record(j1, tasks).replaced);
    EXPECT_TRUE(store.Record(j2, tasks).replaced);
    EXPECT_SCIPRESS_ERROR(store.Record(Uniform("task-x", "ann", Sel({0}, {1})), tasks),
                          ErrorCode::kUnknownTask);
    EXPECT_SCIPRESS_ERROR(store.Record(Uniform("task-i1", "ann", Sel({0}, {0})), tasks),
                          ErrorCode::kInvalidSelection);
    EXPECT_EQ(store.CompletedTasks("ann"), (std::set<std::string>{"task-i0"}));
  }
  JudgmentStore reopened(path);
  const auto snap = reopened.Snapshot();
  ASSERT_EQ(snap.size(), 1u);
  EXPECT_EQ(snap[0], j2);
}

TEST(BwsScore, Arithmetic) {
  // One system, best 6, worst 3 out of 30 on every dimension.
  std::vector<BwsTask> tasks;
  std::vector<BwsJudgment> js;
  for (int i = 0; i < 30; ++i) {
    BwsTask t;
    t.task_id = "t" + std::to_string(i);
    t.candidates = {Candidate{"x", ""}, Candidate{"y", ""}, Candidate{"z", ""}};
    tasks.push_back(t);
    js.push_back(Uniform(t.task_id, "a", i < 6 ? Sel({0}, {1}) : i < 9 ? Sel({1}, {0}) : Sel({1}, {2})));
  }
  const auto rows = BwsScore(js, TaskSet(tasks));
  ASSERT_EQ(rows.size(), 18u);
  EXPECT_EQ(rows[0].system, "x");
  EXPECT_EQ(rows[0].n_best, 6u);
  EXPECT_EQ(rows[0].n_worst, 3u);
  EXPECT_EQ(rows[0].n_shown, 30u);
  EXPECT_DOUBLE_EQ(rows[0].score, 0.1);
  EXPECT_SCIPRESS_ERROR(BwsScore({}, TaskSet(tasks)), ErrorCode::kEmptyJudgments);
}

TEST(BwsScore, FullTiesCancel) {
  BwsTask t;
  t.task_id = "t";
  t.candidates = {Candidate{"x", ""}, Candidate{"y", ""}, Candidate{"z", ""}};
  const auto rows = BwsScore({Uniform("t", "a", Sel({0, 1, 2}, {0, 1, 2})),
                              Uniform("t", "b", Sel({0, 1, 2}, {0, 1, 2}))},
                             TaskSet({t}));
  for (const auto& r : rows) {
    EXPECT_EQ(r.score, 0.0);
    EXPECT_EQ(FormatScore(r.score), "0.000000");
  }
}

TEST(BwsScore, FixtureMatchesGoldenCsv) {
  const auto tasks = LoadTasks(testing::GoldenPath("bws_tasks.jsonl"));
  JudgmentStore store(testing::GoldenPath("bws_judgments.jsonl"));
  const auto rows = BwsScore(store.Snapshot(), tasks);
  EXPECT_EQ(ScoresCsv(rows), testing::Slurp(testing::GoldenPath("bws_scores.csv")));
  bool found = false;
  for (const auto& r : rows) {
    if (r.system == "bart_plan" && r.dimension == Dimension::kStyle) {
      found = true;
      EXPECT_EQ(FormatScore(r.score), "0.300000");
      EXPECT_DOUBLE_EQ(r.score, 0.30);
    }
  }
  EXPECT_TRUE(found);
  const auto back = ScoresFromJson(ScoresToJson(rows));
  EXPECT_EQ(ScoresCsv(back), ScoresCsv(rows));
}

TEST(BwsScore, EmptyCsvIsHeaderOnly) {
  EXPECT_EQ(ScoresCsv({}), "system,dimension,score,n_best,n_worst,n_shown\n");
}

TEST(Krippendorff, PerfectAndAntiAgreement) {
  EXPECT_DOUBLE_EQ(KrippendorffNominal({{0, 0}, {1, 1}, {2, 2}}), 1.0);
  EXPECT_DOUBLE_EQ(KrippendorffNominal({{0, 1}, {1, 0}}), -0.5);
  EXPECT_DOUBLE_EQ(KrippendorffNominal({{0, 0}, {0, 0}}), 1.0);
  EXPECT_SCIPRESS_ERROR(KrippendorffNominal({{0}, {1}}), ErrorCode::kInsufficientData);
}

TEST(Krippendorff, JudgmentsPerfectAgreement) {
  const std::vector<BwsJudgment> js = {Uniform("t1", "a", Sel({0}, {1})), Uniform("t1", "b", Sel({0}, {1})),
                                       Uniform("t2", "a", Sel({2}, {0})), Uniform("t2", "b", Sel({2}, {0}))};
  EXPECT_DOUBLE_EQ(KrippendorffAlpha(js, Dimension::kStyle).alpha, 1.0);
  EXPECT_DOUBLE_EQ(KrippendorffAlpha(js, std::nullopt).alpha, 1.0);
  EXPECT_SCIPRESS_ERROR(KrippendorffAlpha({js[0]}, std::nullopt), ErrorCode::kInsufficientData);
}

TEST(Krippendorff, FixtureMatchesReferencePackage) {
  const auto tasks = LoadTasks(testing::GoldenPath("bws_tasks.jsonl"));
  JudgmentStore store(testing::GoldenPath("bws_judgments.jsonl"));
  std::ifstream in(testing::GoldenPath("bws_alpha.json"));
  const auto expected = nlohmann::json::parse(in);
  const auto results = ComputeResults(store.Snapshot(), tasks);
  ASSERT_EQ(results.agreement.size(), 7u);
  for (const auto& [key, rep] : results.agreement) {
    const double want = std::strtod(expected.at(key).get<std::string>().c_str(), nullptr);
    EXPECT_NEAR(rep.alpha, want, 1e-12) << key;
    EXPECT_EQ(rep.n_annotators, 2u);
  }
  const auto j = ResultsToJson(results);
  EXPECT_EQ(j.at("scores").size(), 18u);
  EXPECT_TRUE(j.at("agreement").contains("POOLED"));
}

TEST(SlotValue, Mapping) {
  EXPECT_EQ(ValueOf(Sel({0}, {1}), 0), SlotValue::kBest);
  EXPECT_EQ(ValueOf(Sel({0}, {1}), 1), SlotValue::kWorst);
  EXPECT_EQ(ValueOf(Sel({0}, {1}), 2), SlotValue::kNeither);
  EXPECT_EQ(ValueOf(Sel({0, 1, 2}, {0, 1, 2}), 0), SlotValue::kNeither);
}

}  // namespace
}  // namespace scipress

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

// Best-Worst Scaling campaigns: tasks with three blinded candidates, judgment
// storage, per-system scores and Krippendorff's alpha.

#ifndef SCIPRESS_BWS_HPP_
#define SCIPRESS_BWS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "scipress/corpus.hpp"
#include "scipress/error.hpp"
#include "scipress/rng.hpp"

namespace scipress {

enum class Dimension {
  kInformativeness,
  kNonRedundancy,
  kFactuality,
  kReadability,
  kStyle,
  kUsefulness
};

inline constexpr std::array<Dimension, 6> kDimensions = {
    Dimension::kInformativeness, Dimension::kNonRedundancy,
    Dimension::kFactuality,      Dimension::kReadability,
    Dimension::kStyle,           Dimension::kUsefulness};

inline std::string_view DimensionName(Dimension d) {
  switch (d) {
    case Dimension::kInformativeness: return "INFORMATIVENESS";
    case Dimension::kNonRedundancy: return "NON_REDUNDANCY";
    case Dimension::kFactuality: return "FACTUALITY";
    case Dimension::kReadability: return "READABILITY";
    case Dimension::kStyle: return "STYLE";
    case Dimension::kUsefulness: return "USEFULNESS";
  }
  return "";
}

inline std::optional<Dimension> ParseDimension(std::string_view s) {
  for (Dimension d : kDimensions) {
    if (s == DimensionName(d)) return d;
  }
  return std::nullopt;
}

inline constexpr std::size_t kSlots = 3;

inline char SlotName(std::size_t slot) { return static_cast<char>('A' + slot); }

inline std::optional<std::size_t> ParseSlot(std::string_view s) {
  if (s.size() != 1 || s[0] < 'A' || s[0] >= 'A' + static_cast<char>(kSlots)) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(s[0] - 'A');
}

struct Candidate {
  std::string system;  // hidden from annotators
  std::string summary;
};

struct BwsTask {
  std::string task_id;
  std::string instance_id;
  std::string abstract;
  std::string introduction;
  std::vector<std::string> metadata;
  std::array<Candidate, kSlots> candidates;  // index = slot

  // What an annotator sees: no system ids.
  nlohmann::json ToPublicJson() const {
    nlohmann::json c = nlohmann::json::array();
    for (std::size_t s = 0; s < kSlots; ++s) {
      c.push_back({{"slot", std::string(1, SlotName(s))},
                   {"summary", candidates[s].summary}});
    }
    return {{"task_id", task_id},
            {"source", {{"abstract", abstract},
                        {"introduction", introduction},
                        {"metadata", metadata}}},
            {"candidates", std::move(c)}};
  }

  nlohmann::json ToJson() const {
    nlohmann::json j = ToPublicJson();
    j["instance_id"] = instance_id;
    for (std::size_t s = 0; s < kSlots; ++s) {
      j["candidates"][s]["system"] = candidates[s].system;
    }
    return j;
  }

  static BwsTask FromJson(const nlohmann::json& j) {
    BwsTask t;
    t.task_id = j.at("task_id").get<std::string>();
    t.instance_id = j.at("instance_id").get<std::string>();
    const auto& src = j.at("source");
    t.abstract = src.at("abstract").get<std::string>();
    t.introduction = src.at("introduction").get<std::string>();
    t.metadata = src.at("metadata").get<std::vector<std::string>>();
    const auto& c = j.at("candidates");
    if (c.size() != kSlots) throw std::invalid_argument("need 3 candidates");
    for (std::size_t s = 0; s < kSlots; ++s) {
      t.candidates[s].system = c.at(s).at("system").get<std::string>();
      t.candidates[s].summary = c.at(s).at("summary").get<std::string>();
    }
    return t;
  }
};

// predictions[system][instance_id] = summary text.
using Predictions = std::map<std::string, std::map<std::string, std::string>>;

// One task per instance. The slot order is a Fisher-Yates shuffle of
// `systems` drawn from SplitMix64(DeriveSeed(seed, "bws:" + instance id)).
inline std::vector<BwsTask> MakeTasks(const std::vector<AlignedInstance>& sample,
                                      const Predictions& predictions,
                                      const std::vector<std::string>& systems,
                                      std::uint64_t seed) {
  if (systems.size() < kSlots) {
    throw Error(ErrorCode::kMissingPrediction,
                "need 3 systems, got " + std::to_string(systems.size()));
  }
  if (systems.size() > kSlots) {
    throw Error(ErrorCode::kInvalidConfig, "exactly 3 systems per task");
  }
  std::vector<BwsTask> out;
  out.reserve(sample.size());
  for (const auto& inst : sample) {
    BwsTask t;
    t.task_id = "task-" + inst.id;
    t.instance_id = inst.id;
    t.abstract = inst.article.abstract.raw();
    if (const Section* intro = Introduction(inst.article)) {
      t.introduction = intro->body.raw();
    }
    for (const auto& m : inst.article.metadata) {
      t.metadata.push_back(m.affiliation.empty() ? m.name
                                                 : m.name + " | " + m.affiliation);
    }
    std::array<std::size_t, kSlots> order{0, 1, 2};
    SplitMix64 rng(DeriveSeed(seed, "bws:" + inst.id));
    for (std::size_t i = kSlots - 1; i > 0; --i) {
      std::swap(order[i], order[static_cast<std::size_t>(rng.Below(i + 1))]);
    }
    for (std::size_t s = 0; s < kSlots; ++s) {
      const std::string& sys = systems[order[s]];
      auto by_sys = predictions.find(sys);
      if (by_sys == predictions.end()) {
        throw Error(ErrorCode::kMissingPrediction, "no outputs for " + sys);
      }
      auto pred = by_sys->second.find(inst.id);
      if (pred == by_sys->second.end()) {
        throw Error(ErrorCode::kMissingPrediction, sys + " has no output for " + inst.id);
      }
      t.candidates[s] = {sys, pred->second};
    }
    out.push_back(std::move(t));
  }
  return out;
}

class TaskSet {
 public:
  TaskSet() = default;
  explicit TaskSet(std::vector<BwsTask> tasks) : tasks_(std::move(tasks)) {
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
      if (!index_.emplace(tasks_[i].task_id, i).second) {
        throw Error(ErrorCode::kDuplicateId, tasks_[i].task_id);
      }
    }
  }

  const std::vector<BwsTask>& tasks() const { return tasks_; }
  const BwsTask* Find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &tasks_[it->second];
  }

 private:
  std::vector<BwsTask> tasks_;
  std::map<std::string, std::size_t> index_;
};

inline void SaveTasks(const std::string& path, const std::vector<BwsTask>& tasks) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  for (const auto& t : tasks) out << t.ToJson().dump() << '\n';
}

inline TaskSet LoadTasks(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::vector<BwsTask> tasks;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      tasks.push_back(BwsTask::FromJson(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kParseError, e.what(), lineno);
    }
  }
  return TaskSet(std::move(tasks));
}

using SlotSet = std::set<std::size_t>;

struct Selection {
  SlotSet best;
  SlotSet worst;
  bool FullTie() const { return best.size() == kSlots && best == worst; }
  friend bool operator==(const Selection&, const Selection&) = default;
};

struct BwsJudgment {
  std::string task_id;
  std::string annotator_id;
  std::map<Dimension, Selection> selections;
  std::string timestamp;

  friend bool operator==(const BwsJudgment&, const BwsJudgment&) = default;

  // Every dimension needs non-empty, disjoint best and worst sets; the one
  // exception is best = worst = all slots.
  void Validate() const {
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kInvalidSelection, why);
    };
    if (task_id.empty()) fail("missing task_id");
    if (annotator_id.empty()) fail("missing annotator_id");
    for (Dimension d : kDimensions) {
      auto it = selections.find(d);
      const std::string name(DimensionName(d));
      if (it == selections.end()) fail(name + ": no selection");
      const Selection& s = it->second;
      if (s.best.empty() || s.worst.empty()) fail(name + ": empty best or worst");
      for (std::size_t slot : s.best) {
        if (slot >= kSlots) fail(name + ": bad slot");
      }
      for (std::size_t slot : s.worst) {
        if (slot >= kSlots) fail(name + ": bad slot");
      }
      if (s.FullTie()) continue;
      for (std::size_t slot : s.best) {
        if (s.worst.count(slot)) {
          fail(name + ": slot " + std::string(1, SlotName(slot)) +
               " is both best and worst");
        }
      }
    }
    if (selections.size() != kDimensions.size()) fail("unknown dimension");
  }

  nlohmann::json ToJson() const {
    auto slots = [](const SlotSet& set) {
      nlohmann::json a = nlohmann::json::array();
      for (std::size_t s : set) a.push_back(std::string(1, SlotName(s)));
      return a;
    };
    nlohmann::json sel = nlohmann::json::object();
    for (const auto& [d, s] : selections) {
      sel[std::string(DimensionName(d))] = {{"best", slots(s.best)},
                                            {"worst", slots(s.worst)}};
    }
    return {{"task_id", task_id},
            {"annotator_id", annotator_id},
            {"selections", std::move(sel)},
            {"timestamp", timestamp}};
  }

  // Malformed bodies (wrong types, unknown slot or dimension names) raise
  // InvalidSelection; the tie rules are checked separately by Validate().
  static BwsJudgment FromJson(const nlohmann::json& j) {
    BwsJudgment out;
    try {
      out.task_id = j.at("task_id").get<std::string>();
      out.annotator_id = j.at("annotator_id").get<std::string>();
      if (j.contains("timestamp")) out.timestamp = j.at("timestamp").get<std::string>();
      for (const auto& [name, sel] : j.at("selections").items()) {
        auto d = ParseDimension(name);
        if (!d) throw Error(ErrorCode::kInvalidSelection, "unknown dimension " + name);
        Selection s;
        auto read = [](const nlohmann::json& arr, SlotSet& into) {
          for (const auto& v : arr) {
            auto slot = ParseSlot(v.get<std::string>());
            if (!slot) throw Error(ErrorCode::kInvalidSelection, "bad slot " + v.dump());
            into.insert(*slot);
          }
        };
        read(sel.at("best"), s.best);
        read(sel.at("worst"), s.worst);
        out.selections[*d] = std::move(s);
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kInvalidSelection, e.what());
    }
    return out;
  }
};

// Append-only JSON Lines log. Reading keeps the last record per
// (annotator, task). Appends are serialized by a mutex.
class JudgmentStore {
 public:
  struct Ack {
    bool replaced = false;
  };

  explicit JudgmentStore(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        auto j = BwsJudgment::FromJson(nlohmann::json::parse(line));
        latest_[{j.annotator_id, j.task_id}] = std::move(j);
      } catch (const std::exception& e) {
        throw Error(ErrorCode::kParseError, e.what(), lineno);
      }
    }
  }

  const std::string& path() const { return path_; }

  Ack Record(const BwsJudgment& judgment, const TaskSet& tasks) {
    if (!tasks.Find(judgment.task_id)) {
      throw Error(ErrorCode::kUnknownTask, judgment.task_id);
    }
    judgment.Validate();
    std::lock_guard<std::mutex> lock(mu_);
    {
      std::ofstream out(path_, std::ios::app | std::ios::binary);
      if (!out) throw Error(ErrorCode::kIo, "cannot append to " + path_);
      out << judgment.ToJson().dump() << '\n';
      out.flush();
      if (!out) throw Error(ErrorCode::kIo, "write failed for " + path_);
    }
    auto [it, inserted] =
        latest_.insert_or_assign({judgment.annotator_id, judgment.task_id}, judgment);
    (void)it;
    if (!inserted) {
      std::fprintf(stderr, "judgment replaced: annotator=%s task=%s\n",
                   judgment.annotator_id.c_str(), judgment.task_id.c_str());
    }
    return Ack{!inserted};
  }

  // Ordered by (annotator, task).
  std::vector<BwsJudgment> Snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<BwsJudgment> out;
    out.reserve(latest_.size());
    for (const auto& [key, j] : latest_) out.push_back(j);
    return out;
  }

  std::set<std::string> CompletedTasks(const std::string& annotator) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::set<std::string> out;
    for (const auto& [key, j] : latest_) {
      if (key.first == annotator) out.insert(key.second);
    }
    return out;
  }

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::map<std::pair<std::string, std::string>, BwsJudgment> latest_;
};

struct BwsScoreRow {
  std::string system;
  Dimension dimension;
  double score = 0.0;
  std::size_t n_best = 0;
  std::size_t n_worst = 0;
  std::size_t n_shown = 0;
};

// Rows ordered by system name, then dimension. A system picked in a tie
// (several bests or several worsts) is counted once for each set it is in.
inline std::vector<BwsScoreRow> BwsScore(const std::vector<BwsJudgment>& judgments,
                                         const TaskSet& tasks) {
  if (judgments.empty()) throw Error(ErrorCode::kEmptyJudgments, "");
  std::map<std::pair<std::string, Dimension>, BwsScoreRow> rows;
  for (const auto& j : judgments) {
    const BwsTask* t = tasks.Find(j.task_id);
    if (!t) throw Error(ErrorCode::kUnknownTask, j.task_id);
    for (Dimension d : kDimensions) {
      auto sel = j.selections.find(d);
      for (std::size_t s = 0; s < kSlots; ++s) {
        auto& row = rows[{t->candidates[s].system, d}];
        row.system = t->candidates[s].system;
        row.dimension = d;
        ++row.n_shown;
        if (sel == j.selections.end()) continue;
        if (sel->second.best.count(s)) ++row.n_best;
        if (sel->second.worst.count(s)) ++row.n_worst;
      }
    }
  }
  std::vector<BwsScoreRow> out;
  for (auto& [key, row] : rows) {
    row.score = (static_cast<double>(row.n_best) - static_cast<double>(row.n_worst)) /
                static_cast<double>(row.n_shown);
    out.push_back(row);
  }
  return out;
}

struct AgreementReport {
  double alpha = 0.0;
  std::size_t n_units = 0;       // units with at least two ratings
  std::size_t n_annotators = 0;
};

// Nominal alpha from the coincidence matrix. units[u] holds the category
// ids given to unit u (one per rater who rated it).
//   alpha = 1 - (n - 1) * sum_{c != k} o_ck / sum_{c != k} n_c * n_k
// When every pairable value falls in one category there is no expected
// disagreement; that case returns 1.
inline double KrippendorffNominal(const std::vector<std::vector<int>>& units) {
  std::map<std::pair<int, int>, double> o;
  std::map<int, double> n_c;
  for (const auto& values : units) {
    const std::size_t m = values.size();
    if (m < 2) continue;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        const double w = 1.0 / static_cast<double>(m - 1);
        o[{values[i], values[j]}] += w;
        n_c[values[i]] += w;
      }
    }
  }
  double n = 0.0;
  for (const auto& [c, v] : n_c) n += v;
  if (n == 0.0) throw Error(ErrorCode::kInsufficientData, "no pairable values");
  double observed = 0.0;
  for (const auto& [ck, v] : o) {
    if (ck.first != ck.second) observed += v;
  }
  double expected = 0.0;
  for (const auto& [c, vc] : n_c) {
    for (const auto& [k, vk] : n_c) {
      if (c != k) expected += vc * vk;
    }
  }
  if (expected == 0.0) return 1.0;
  return 1.0 - (n - 1.0) * observed / expected;
}

enum class SlotValue { kBest = 0, kWorst = 1, kNeither = 2 };

// BEST or WORST when the slot is in exactly that set; NEITHER otherwise,
// which includes the all-slots tie.
inline SlotValue ValueOf(const Selection& s, std::size_t slot) {
  if (s.FullTie()) return SlotValue::kNeither;
  const bool b = s.best.count(slot) > 0;
  const bool w = s.worst.count(slot) > 0;
  if (b && !w) return SlotValue::kBest;
  if (w && !b) return SlotValue::kWorst;
  return SlotValue::kNeither;
}

// Units are (task, slot) per dimension; with no dimension given, units are
// (task, slot, dimension) over all six.
inline AgreementReport KrippendorffAlpha(const std::vector<BwsJudgment>& judgments,
                                         std::optional<Dimension> dimension) {
  std::set<std::string> annotators;
  std::map<std::tuple<std::string, std::size_t, int>, std::vector<int>> units;
  for (const auto& j : judgments) {
    annotators.insert(j.annotator_id);
    for (const auto& [d, sel] : j.selections) {
      if (dimension && d != *dimension) continue;
      for (std::size_t s = 0; s < kSlots; ++s) {
        units[{j.task_id, s, static_cast<int>(d)}].push_back(
            static_cast<int>(ValueOf(sel, s)));
      }
    }
  }
  if (annotators.size() < 2) {
    throw Error(ErrorCode::kInsufficientData, "need >= 2 annotators");
  }
  std::vector<std::vector<int>> values;
  AgreementReport r;
  r.n_annotators = annotators.size();
  for (auto& [key, v] : units) {
    if (v.size() >= 2) ++r.n_units;
    values.push_back(std::move(v));
  }
  if (r.n_units == 0) {
    throw Error(ErrorCode::kInsufficientData, "no unit has two ratings");
  }
  r.alpha = KrippendorffNominal(values);
  return r;
}

inline std::string FormatScore(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

inline std::string ScoresCsv(const std::vector<BwsScoreRow>& rows) {
  std::string out = "system,dimension,score,n_best,n_worst,n_shown\n";
  for (const auto& r : rows) {
    out += r.system + "," + std::string(DimensionName(r.dimension)) + "," +
           FormatScore(r.score) + "," + std::to_string(r.n_best) + "," +
           std::to_string(r.n_worst) + "," + std::to_string(r.n_shown) + "\n";
  }
  return out;
}

inline nlohmann::json ScoresToJson(const std::vector<BwsScoreRow>& rows) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rows) {
    a.push_back({{"system", r.system},
                 {"dimension", DimensionName(r.dimension)},
                 {"score", r.score},
                 {"n_best", r.n_best},
                 {"n_worst", r.n_worst},
                 {"n_shown", r.n_shown}});
  }
  return a;
}

inline std::vector<BwsScoreRow> ScoresFromJson(const nlohmann::json& a) {
  std::vector<BwsScoreRow> out;
  for (const auto& j : a) {
    BwsScoreRow r;
    r.system = j.at("system").get<std::string>();
    auto d = ParseDimension(j.at("dimension").get<std::string>());
    if (!d) throw Error(ErrorCode::kParseError, "unknown dimension");
    r.dimension = *d;
    r.score = j.at("score").get<double>();
    r.n_best = j.at("n_best").get<std::size_t>();
    r.n_worst = j.at("n_worst").get<std::size_t>();
    r.n_shown = j.at("n_shown").get<std::size_t>();
    out.push_back(std::move(r));
  }
  return out;
}

struct CampaignResults {
  std::vector<BwsScoreRow> scores;
  std::map<std::string, AgreementReport> agreement;  // dimension name or "POOLED"
};

// Agreement entries are left out when there is not enough data for alpha.
inline CampaignResults ComputeResults(const std::vector<BwsJudgment>& judgments,
                                      const TaskSet& tasks) {
  CampaignResults r;
  if (judgments.empty()) return r;
  r.scores = BwsScore(judgments, tasks);
  auto add = [&](const std::string& key, std::optional<Dimension> d) {
    try {
      r.agreement[key] = KrippendorffAlpha(judgments, d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInsufficientData) throw;
    }
  };
  for (Dimension d : kDimensions) add(std::string(DimensionName(d)), d);
  add("POOLED", std::nullopt);
  return r;
}

inline nlohmann::json ResultsToJson(const CampaignResults& r) {
  nlohmann::json agreement = nlohmann::json::object();
  for (const auto& [k, a] : r.agreement) {
    agreement[k] = {{"alpha", a.alpha},
                    {"n_units", a.n_units},
                    {"n_annotators", a.n_annotators}};
  }
  return {{"scores", ScoresToJson(r.scores)}, {"agreement", std::move(agreement)}};
}

}  // namespace scipress

#endif  // SCIPRESS_BWS_HPP_

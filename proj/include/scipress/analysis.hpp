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

// Corpus-level compositions of the per-document measures, shared by the
// command line tool and the report.

#ifndef SCIPRESS_ANALYSIS_HPP_
#define SCIPRESS_ANALYSIS_HPP_

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scipress/baselines.hpp"
#include "scipress/corpus.hpp"
#include "scipress/error.hpp"
#include "scipress/extractivity.hpp"
#include "scipress/parallel.hpp"
#include "scipress/plan.hpp"
#include "scipress/readability.hpp"
#include "scipress/rouge.hpp"
#include "scipress/significance.hpp"
#include "scipress/style.hpp"

namespace scipress {

// Fixed-point text without a "-0" artifact.
inline std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

inline double Mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// ---------------------------------------------------------------- readability

struct ReadabilityRow {
  std::string id;
  ReadabilityReport report;
};

inline std::vector<ReadabilityRow> ReadabilityRows(
    const std::vector<AlignedInstance>& corpus, Side side,
    const FamiliarWordList& list, std::size_t jobs) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "readability");
  return ParallelMap(corpus.size(), jobs, [&](std::size_t i) {
    return ReadabilityRow{corpus[i].id,
                          MakeReadabilityReport(SideText(corpus[i], side), list)};
  });
}

inline ReadabilityReport MacroAverage(const std::vector<ReadabilityRow>& rows) {
  std::vector<ReadabilityReport> r;
  for (const auto& row : rows) r.push_back(row.report);
  return MacroAverage(r);
}

// ---------------------------------------------------------------- extractivity

// Which document a summary is compared against. kAuto: the PR summary is
// compared with the abstract followed by the introduction; the abstract
// with the article body (the abstract cannot be its own source).
enum class SourceDoc { kAuto, kInput, kBody };

inline TokenizedText SourceFor(const AlignedInstance& inst, Side side, SourceDoc src) {
  if (src == SourceDoc::kAuto) {
    src = side == Side::kSciAbstract ? SourceDoc::kBody : SourceDoc::kInput;
  }
  if (src == SourceDoc::kBody) return SideText(inst, Side::kSciBody);
  return InputDocument(inst.article);
}

struct ExtractivityRow {
  std::string id;
  double coverage = 0.0;
  double density = 0.0;
  std::array<std::optional<double>, 3> novel;  // n = 1..3; empty if too short
};

inline std::vector<ExtractivityRow> ExtractivityRows(
    const std::vector<AlignedInstance>& corpus, Side side, SourceDoc src,
    std::size_t jobs) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "extractivity");
  return ParallelMap(corpus.size(), jobs, [&](std::size_t i) {
    const auto& inst = corpus[i];
    const auto summary = SideText(inst, side).Tokens();
    const auto doc = SourceFor(inst, side, src).Tokens();
    if (summary.empty()) {
      throw Error(ErrorCode::kEmptySummary, inst.id + " " + std::string(SideName(side)));
    }
    ExtractivityRow row;
    row.id = inst.id;
    const auto rep = MakeExtractivityReport(doc, summary);
    row.coverage = rep.coverage;
    row.density = rep.density;
    for (std::size_t n = 1; n <= 3; ++n) {
      if (summary.size() >= n) row.novel[n - 1] = NovelNgrams(doc, summary, n);
    }
    return row;
  });
}

struct ExtractivitySummary {
  double coverage = 0.0;
  double density = 0.0;
  std::array<double, 3> novel{0, 0, 0};  // macro-averaged over defined rows
};

inline ExtractivitySummary Summarize(const std::vector<ExtractivityRow>& rows) {
  ExtractivitySummary s;
  std::vector<double> cov, den;
  std::array<std::vector<double>, 3> nov;
  for (const auto& r : rows) {
    cov.push_back(r.coverage);
    den.push_back(r.density);
    for (std::size_t n = 0; n < 3; ++n) {
      if (r.novel[n]) nov[n].push_back(*r.novel[n]);
    }
  }
  s.coverage = Mean(cov);
  s.density = Mean(den);
  for (std::size_t n = 0; n < 3; ++n) s.novel[n] = Mean(nov[n]);
  return s;
}

inline std::string ExtractivityCsv(const std::vector<ExtractivityRow>& rows) {
  std::string out = "id,coverage,density,novel1,novel2,novel3\n";
  for (const auto& r : rows) {
    out += r.id + "," + Fixed(r.coverage, 6) + "," + Fixed(r.density, 6);
    for (const auto& n : r.novel) out += "," + (n ? Fixed(*n, 6) : std::string());
    out += "\n";
  }
  return out;
}

inline nlohmann::json HistogramJson(const std::vector<ExtractivityRow>& rows,
                                    std::size_t cov_bins, std::size_t den_bins,
                                    double den_max) {
  CoverageDensityHistogram h(cov_bins, den_bins, den_max);
  for (const auto& r : rows) h.Add(r.coverage, r.density);
  return {{"coverage_bins", cov_bins},
          {"coverage_range", {0.0, 1.0}},
          {"density_bins", den_bins},
          {"density_range", {0.0, den_max}},
          {"counts", h.counts}};
}

// ---------------------------------------------------------------- predictions

struct Prediction {
  std::string instance_id;
  std::string system;
  std::string summary;
  std::vector<std::size_t> sentence_indices;
  bool degenerate_graph = false;
};

inline nlohmann::json PredictionJson(const Prediction& p) {
  return {{"instance_id", p.instance_id},
          {"system", p.system},
          {"summary", p.summary},
          {"sentence_indices", p.sentence_indices},
          {"degenerate_graph", p.degenerate_graph}};
}

inline std::vector<Prediction> RunBaselineOnCorpus(
    const std::vector<AlignedInstance>& corpus, BaselineSystem system,
    const BaselineConfig& cfg, std::size_t jobs) {
  cfg.Validate();
  return ParallelMap(corpus.size(), jobs, [&](std::size_t i) {
    const auto s = RunBaseline(system, corpus[i], cfg);
    return Prediction{corpus[i].id, std::string(BaselineName(system)), s.text,
                      s.sentence_indices, s.degenerate_graph};
  });
}

// system -> instance id -> summary, systems in first-seen order.
struct PredictionSet {
  std::vector<std::string> systems;
  std::map<std::string, std::map<std::string, std::string>> by_system;

  void Add(const std::string& system, const std::string& id, const std::string& text) {
    auto [it, fresh] = by_system.try_emplace(system);
    if (fresh) systems.push_back(system);
    if (!it->second.emplace(id, text).second) {
      throw Error(ErrorCode::kDuplicateId, system + "/" + id);
    }
  }
};

inline void LoadPredictions(const std::string& path, PredictionSet& into) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      into.Add(j.at("system").get<std::string>(), j.at("instance_id").get<std::string>(),
               j.at("summary").get<std::string>());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDuplicateId) throw Error(e.code(), e.detail(), lineno);
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kParseError, e.what(), lineno);
    }
  }
}

// ---------------------------------------------------------------- evaluation

inline std::vector<TokenSeq> Sentences(const TokenizedText& t) {
  std::vector<TokenSeq> out;
  for (const auto& s : t.sentences()) out.push_back(s.tokens);
  return out;
}

// PR summary sentences against abstract sentences.
inline StyleModel TrainStyleOnCorpus(const std::vector<AlignedInstance>& corpus,
                                     std::uint64_t seed) {
  std::vector<TokenSeq> press, sci;
  for (const auto& inst : corpus) {
    for (auto& s : Sentences(inst.press.summary)) press.push_back(std::move(s));
    for (auto& s : Sentences(inst.article.abstract)) sci.push_back(std::move(s));
  }
  return TrainStyleModel(press, sci, seed);
}

struct InstanceScores {
  std::string id;
  double r1 = 0, r2 = 0, rl = 0;  // f1
  double style = 0;
};

struct SystemEvaluation {
  std::string system;
  std::vector<InstanceScores> rows;  // corpus order
  double r1 = 0, r2 = 0, rl = 0, style = 0;
  std::optional<std::string> compared_to;
  std::map<std::string, SignificanceResult> significance;  // r1, r2, rl
};

// Scores one system against the PR summaries. Every instance needs a
// prediction.
inline SystemEvaluation EvaluateSystem(const std::vector<AlignedInstance>& corpus,
                                       const std::string& system,
                                       const std::map<std::string, std::string>& preds,
                                       const StyleModel& style, std::size_t jobs) {
  for (const auto& inst : corpus) {
    if (!preds.count(inst.id)) {
      throw Error(ErrorCode::kMissingPrediction, system + " has no output for " + inst.id);
    }
  }
  for (const auto& [id, text] : preds) {
    bool known = false;
    for (const auto& inst : corpus) known = known || inst.id == id;
    if (!known) throw Error(ErrorCode::kDanglingAnnotation, system + " predicts unknown " + id);
  }
  SystemEvaluation ev;
  ev.system = system;
  ev.rows = ParallelMap(corpus.size(), jobs, [&](std::size_t i) {
    const auto& inst = corpus[i];
    const TokenizedText cand = TokenizeOrEmpty(preds.at(inst.id));
    if (cand.empty()) throw Error(ErrorCode::kEmptySummary, system + "/" + inst.id);
    const auto t = RougeAll(cand.FoldedTokens(), inst.press.summary.FoldedTokens());
    return InstanceScores{inst.id, t.r1.f1, t.r2.f1, t.rl.f1, StyleScore(style, cand)};
  });
  std::vector<double> r1, r2, rl, st;
  for (const auto& r : ev.rows) {
    r1.push_back(r.r1);
    r2.push_back(r.r2);
    rl.push_back(r.rl);
    st.push_back(r.style);
  }
  ev.r1 = Mean(r1);
  ev.r2 = Mean(r2);
  ev.rl = Mean(rl);
  ev.style = Mean(st);
  return ev;
}

// Each system is tested against the other system with the closest mean R1
// (first in input order on ties), pairing scores by instance.
inline void AddSignificance(std::vector<SystemEvaluation>& evals, std::size_t resamples,
                            double level, std::uint64_t seed) {
  if (evals.size() < 2 || evals.front().rows.size() < 2) return;
  for (auto& a : evals) {
    const SystemEvaluation* best = nullptr;
    for (const auto& b : evals) {
      if (&a == &b) continue;
      if (!best || std::fabs(b.r1 - a.r1) < std::fabs(best->r1 - a.r1)) best = &b;
    }
    a.compared_to = best->system;
    auto column = [](const SystemEvaluation& e, double InstanceScores::*m) {
      std::vector<double> v;
      for (const auto& r : e.rows) v.push_back(r.*m);
      return v;
    };
    const std::pair<const char*, double InstanceScores::*> metrics[] = {
        {"r1", &InstanceScores::r1}, {"r2", &InstanceScores::r2}, {"rl", &InstanceScores::rl}};
    for (const auto& [name, m] : metrics) {
      a.significance[name] =
          BootstrapCi(column(a, m), column(*best, m), resamples, level,
                      DeriveSeed(seed, "bootstrap:" + a.system + ":" + best->system + ":" + name));
    }
  }
}

inline std::string MetricsCsv(const std::vector<SystemEvaluation>& evals) {
  std::string out = "system,n,r1,r2,rl,style,compared_to,r1_ci_low,r1_ci_high,r1_significant\n";
  for (const auto& e : evals) {
    out += e.system + "," + std::to_string(e.rows.size()) + "," + Fixed(100 * e.r1, 4) + "," +
           Fixed(100 * e.r2, 4) + "," + Fixed(100 * e.rl, 4) + "," + Fixed(e.style, 4) + ",";
    auto it = e.significance.find("r1");
    if (it != e.significance.end()) {
      out += *e.compared_to + "," + Fixed(100 * *it->second.ci_low, 4) + "," +
             Fixed(100 * *it->second.ci_high, 4) + "," +
             (it->second.significant ? "true" : "false");
    } else {
      out += ",,,";
    }
    out += "\n";
  }
  return out;
}

inline std::string InstanceScoresCsv(const std::vector<SystemEvaluation>& evals) {
  std::string out = "instance_id,system,r1,r2,rl,style\n";
  for (const auto& e : evals) {
    for (const auto& r : e.rows) {
      out += r.id + "," + e.system + "," + Fixed(r.r1, 6) + "," + Fixed(r.r2, 6) + "," +
             Fixed(r.rl, 6) + "," + Fixed(r.style, 6) + "\n";
    }
  }
  return out;
}

inline nlohmann::json EvaluationJson(const std::vector<SystemEvaluation>& evals) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : evals) {
    nlohmann::json j = {{"system", e.system}, {"n", e.rows.size()}, {"r1", e.r1},
                        {"r2", e.r2},         {"rl", e.rl},         {"style", e.style}};
    if (e.compared_to) {
      j["compared_to"] = *e.compared_to;
      for (const auto& [m, s] : e.significance) {
        j["significance"][m] = {{"difference", s.statistic},
                                {"ci_low", *s.ci_low},
                                {"ci_high", *s.ci_high},
                                {"significant", s.significant}};
      }
    }
    a.push_back(std::move(j));
  }
  return a;
}

// ---------------------------------------------------------------- plans

enum class Labeler { kFile, kHeuristic };

inline std::string_view LabelerName(Labeler l) {
  return l == Labeler::kFile ? "file" : "heuristic";
}

// (instance id, side) -> label groups.
using LabelIndex = std::map<std::pair<std::string, std::string>, std::vector<RoleGroup>>;

inline LabelIndex IndexLabels(const std::vector<LabelRecord>& records) {
  LabelIndex idx;
  for (const auto& r : records) {
    if (!idx.emplace(std::make_pair(r.instance_id, r.side), r.labels).second) {
      throw Error(ErrorCode::kDuplicateId, r.instance_id + "/" + r.side);
    }
  }
  return idx;
}

struct LabeledSide {
  std::vector<RoleGroup> groups;  // one per sentence
  Labeler labeler = Labeler::kHeuristic;
};

// External labels win; otherwise the heuristic labeler (with AUTHOR groups
// for summary sentences that name the authors). `side_key` is the label
// file side name.
inline LabeledSide LabelsFor(const AlignedInstance& inst, const TokenizedText& text,
                             const std::string& side_key, const LabelIndex& labels) {
  LabeledSide out;
  auto it = labels.find({inst.id, side_key});
  if (it != labels.end()) {
    if (it->second.size() != text.sentence_count()) {
      throw Error(ErrorCode::kLabelMismatch,
                  inst.id + " " + side_key + ": " + std::to_string(it->second.size()) +
                      " labels for " + std::to_string(text.sentence_count()) + " sentences");
    }
    out.groups = it->second;
    out.labeler = Labeler::kFile;
    return out;
  }
  if (side_key == "SCI_INPUT") {
    for (Role r : HeuristicLabels(text, inst.article.metadata)) out.groups.push_back({r});
  } else {
    out.groups = HeuristicPlan(text, inst.article.metadata).groups();
  }
  return out;
}

struct SerializedPair {
  std::string instance_id;
  std::string input;
  std::string target;
  Labeler input_labeler;
  Labeler plan_labeler;
};

inline SerializedPair SerializeInstance(const AlignedInstance& inst, const LabelIndex& labels,
                                        bool lowercase) {
  const TokenizedText body = InputDocument(inst.article);
  const LabeledSide in = LabelsFor(inst, body, "SCI_INPUT", labels);
  LabeledDocument doc{body, {}};
  for (const auto& g : in.groups) {
    if (g.size() != 1) {
      throw Error(ErrorCode::kLabelMismatch, inst.id + ": input sentences take one role");
    }
    doc.sentence_labels.push_back(g.front());
  }
  const LabeledSide plan = LabelsFor(inst, inst.press.summary, "PR_SUMMARY", labels);
  SerializedPair p;
  p.instance_id = inst.id;
  p.input = SerializeInput(doc, inst.article.metadata, lowercase);
  p.target = SerializeTarget(RhetoricalPlan(plan.groups), inst.press.summary, lowercase);
  p.input_labeler = in.labeler;
  p.plan_labeler = plan.labeler;
  return p;
}

// Mean relative position in [0, 1) of a role's mass, using bin centres.
inline double MeanPosition(const PlanDistribution& d, Role role) {
  double mass = 0.0, pos = 0.0;
  const auto& share = d.share.at(role);
  for (std::size_t b = 0; b < d.bins; ++b) {
    const double m = share[b] * d.bin_mass[b];
    mass += m;
    pos += m * (static_cast<double>(b) + 0.5) / static_cast<double>(d.bins);
  }
  return mass > 0.0 ? pos / mass : 0.0;
}

inline nlohmann::json DistributionJson(const PlanDistribution& d) {
  nlohmann::json share = nlohmann::json::object();
  nlohmann::json mean_pos = nlohmann::json::object();
  for (Role r : kRoles) {
    share[std::string(RoleName(r))] = d.share.at(r);
    mean_pos[std::string(RoleName(r))] = MeanPosition(d, r);
  }
  return {{"bins", d.bins}, {"bin_mass", d.bin_mass}, {"share", share},
          {"mean_position", mean_pos}};
}

}  // namespace scipress

#endif  // SCIPRESS_ANALYSIS_HPP_

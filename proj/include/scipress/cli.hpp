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

// The `scipress` command line tool. Exit status: 0 success, 1 data error,
// 2 usage error.

#ifndef SCIPRESS_CLI_HPP_
#define SCIPRESS_CLI_HPP_

#include <cctype>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scipress/analysis.hpp"
#include "scipress/bws.hpp"
#include "scipress/manifest.hpp"
#include "scipress/report.hpp"
#include "scipress/service.hpp"

namespace scipress::cli {

namespace fs = std::filesystem;

struct Common {
  std::string out = "out";
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

// Collects everything a run writes and the manifest that goes with it.
class Run {
 public:
  Run(const CLI::App* sub, const Common& common, std::string command, std::ostream& log)
      : sub_(sub), common_(common), log_(log) {
    manifest_.command = std::move(command);
    manifest_.seeds["seed"] = common.seed;
  }

  void Input(const std::string& path) { manifest_.inputs.push_back(path); }
  void Seed(const std::string& key, const nlohmann::json& v) { manifest_.seeds[key] = v; }
  void Note(const std::string& key, const nlohmann::json& v) { notes_[key] = v; }

  void Write(const std::string& name, const std::string& content) {
    files_.emplace_back(name, content);
  }

  void Finish() {
    fs::create_directories(common_.out);
    for (const auto& [name, content] : files_) WriteFile(fs::path(common_.out) / name, content);
    manifest_.config = Snapshot();
    for (const auto& [k, v] : notes_.items()) manifest_.config[k] = v;
    manifest_.timestamp = UtcTimestamp();
    WriteFile(fs::path(common_.out) / "manifest.json", manifest_.ToJson().dump(2) + "\n");
    log_ << "wrote " << files_.size() + 1 << " files to " << common_.out << "\n";
  }

 private:
  // Every option of the subcommand with its resolved value.
  nlohmann::json Snapshot() const {
    nlohmann::json cfg = nlohmann::json::object();
    for (const CLI::Option* opt : sub_->get_options()) {
      const std::string name = opt->get_single_name();
      if (name == "help" || name == "config") continue;
      std::vector<std::string> vals = opt->results();
      if (vals.empty()) {
        const std::string def = opt->get_default_str();
        if (!def.empty()) vals.push_back(def);
      }
      if (vals.size() == 1) {
        cfg[name] = vals.front();
      } else {
        cfg[name] = vals;
      }
    }
    return cfg;
  }

  const CLI::App* sub_;
  Common common_;
  std::ostream& log_;
  RunManifest manifest_;
  nlohmann::json notes_ = nlohmann::json::object();
  std::vector<std::pair<std::string, std::string>> files_;
};

inline std::string SideCheck(const std::string& s) {
  return ParseSide(s) ? std::string() : "unknown side '" + s + "'";
}

inline Side ToSide(const std::string& s) { return *ParseSide(s); }

inline std::string FileStem(Side s) {
  std::string name(SideName(s));
  for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return name;
}

inline std::vector<AlignedInstance> Corpus(Run& run, const std::string& path,
                                           const std::string& source_filter = "") {
  run.Input(path);
  auto corpus = LoadCorpus(path, source_filter.empty() ? std::nullopt
                                                       : std::optional<std::string>(source_filter));
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, path);
  return corpus;
}

inline FamiliarWordList WordList(Run& run, const std::string& path) {
  if (path.empty()) return FamiliarWordList::Default();
  run.Input(path);
  return FamiliarWordList::FromFile(path);
}

inline nlohmann::json StatsJson(const CorpusStats& s) {
  return {{"docs", s.docs}, {"mean_words", s.mean_words}, {"mean_sentences", s.mean_sentences}};
}

inline nlohmann::json ReadabilityJson(const ReadabilityReport& r) {
  return {{"fkgl", r.fkgl}, {"cli", r.cli}, {"dcrs", r.dcrs},
          {"gunning", r.gunning}, {"average", r.average}};
}

inline constexpr std::array<Side, 4> kAllSides = {Side::kPrSummary, Side::kPrArticle,
                                                  Side::kSciBody, Side::kSciAbstract};

inline std::string JoinArgs(int argc, const char* const* argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) out.push_back(' ');
    out += argv[i];
  }
  return out;
}

inline int RunCli(int argc, const char* const* argv, std::ostream& out = std::cout,
                  std::ostream& err = std::cerr) {
  CLI::App app{"Corpus analysis, baselines, metrics and BWS evaluation for paired "
               "scientific articles and press releases.",
               "scipress"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Read options from a TOML/INI file ([subcommand] key = value)");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  const std::string command = JoinArgs(argc, argv);

  Common common;
  auto add_common = [&](CLI::App* sub, bool seeded = false) {
    sub->add_option("--out", common.out, "Output directory");
    sub->add_option("--jobs", common.jobs, "Worker threads for per-instance work")
        ->check(CLI::Range(1, 1024));
    if (seeded) sub->add_option("--seed", common.seed, "Seed for every random stream");
  };

  // ingest
  std::string corpus_path, source_filter;
  auto* ingest = app.add_subcommand("ingest", "Validate a corpus file and summarize it");
  ingest->add_option("--corpus", corpus_path, "Corpus JSON Lines file")->required();
  ingest->add_option("--source-filter", source_filter, "Keep only articles with this source tag");
  add_common(ingest);

  // stats
  std::vector<std::string> stat_sides;
  std::string entities_path;
  auto* stats = app.add_subcommand("stats", "Mean tokens and sentences per document");
  stats->add_option("--corpus", corpus_path, "Corpus JSON Lines file")->required();
  stats->add_option("--side", stat_sides, "pr-summary, pr-article, sci-body, sci-abstract")
      ->check(SideCheck);
  stats->add_option("--entities", entities_path, "Entity annotation JSON Lines file");
  add_common(stats);

  // readability
  std::vector<std::string> read_sides{"sci-abstract", "pr-summary"};
  std::string familiar_path;
  auto* readability = app.add_subcommand("readability", "FKGL, Coleman-Liau, Dale-Chall, Gunning fog");
  readability->add_option("--corpus", corpus_path, "Corpus JSON Lines file")->required();
  readability->add_option("--side", read_sides, "Sides to score")->check(SideCheck);
  readability->add_option("--familiar-words", familiar_path, "Familiar word list, one per line");
  add_common(readability);

  // extractivity
  std::vector<std::string> ext_sides{"sci-abstract", "pr-summary"};
  std::string source_doc = "auto";
  std::size_t cov_bins = 10, den_bins = 10;
  double den_max = 8.0;
  auto* extractivity =
      app.add_subcommand("extractivity", "Fragment coverage and density, novel n-grams");
  extractivity->add_option("--corpus", corpus_path, "Corpus JSON Lines file")->required();
  extractivity->add_option("--side", ext_sides, "Summary sides")->check(SideCheck);
  extractivity
      ->add_option("--source", source_doc,
                   "Source document: input (abstract + introduction), body, or auto "
                   "(body for the abstract, input otherwise)")
      ->check(CLI::IsMember({"auto", "input", "body"}));
  extractivity->add_option("--coverage-bins", cov_bins)->check(CLI::Range(1, 1000));
  extractivity->add_option("--density-bins", den_bins)->check(CLI::Range(1, 1000));
  extractivity->add_option("--density-max", den_max)->check(CLI::PositiveNumber);
  add_common(extractivity);

  // baseline
  std::string system;
  BaselineConfig bcfg;
  auto* baseline = app.add_subcommand("baseline", "Run an extractive baseline");
  baseline->add_option("--corpus", corpus_path, "Corpus JSON Lines file")->required();
  baseline->add_option("--system", system)
      ->required()
      ->check(CLI::IsMember({"lead", "random", "oracle", "lexrank", "textrank", "abstract"}));
  baseline->add_option("--n", bcfg.n, "Sentences per summary")->check(CLI::Range(1, 1000));
  baseline->add_option("--damping", bcfg.damping)->check(CLI::Range(0.0, 1.0));
  baseline->add_option("--eps", bcfg.convergence_eps, "Power iteration L1 tolerance");
  baseline->add_option("--max-iters", bcfg.max_iters);
  baseline->add_flag("--oracle-pad", bcfg.oracle_pad, "Oracle always takes n sentences");
  add_common(baseline, true);

  // evaluate
  std::vector<std::string> prediction_paths;
  std::string style_model_path;
  std::size_t resamples = 1000;
  double level = 0.95;
  auto* evaluate = app.add_subcommand("evaluate", "ROUGE, style and bootstrap significance");
  evaluate->add_option("--corpus", corpus_path, "Corpus JSON Lines file")->required();
  evaluate->add_option("--predictions", prediction_paths, "Predictions JSON Lines files")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--style-model", style_model_path,
                       "Trained style model; default trains one on the corpus");
  evaluate->add_option("--resamples", resamples)->check(CLI::Range(1, 1000000));
  evaluate->add_option("--level", level)->check(CLI::Range(0.5, 0.999999));
  add_common(evaluate, true);

  // style
  std::string eval_corpus_path;
  double holdout = 0.2;
  auto* style = app.add_subcommand("style", "Train the press-release style classifier");
  style->add_option("--corpus", corpus_path, "Training corpus")->required();
  style->add_option("--eval-corpus", eval_corpus_path,
                    "Held-out corpus; default holds out a seeded share of --corpus");
  style->add_option("--holdout", holdout)->check(CLI::Range(0.0, 0.9));
  add_common(style, true);

  // plan
  std::string labels_path;
  bool lowercase = false;
  std::size_t bins = 10;
  auto* plan = app.add_subcommand("plan", "Serialize plan-then-summarize pairs and role positions");
  plan->add_option("--corpus", corpus_path, "Corpus JSON Lines file")->required();
  plan->add_option("--labels", labels_path, "Rhetorical role labels JSON Lines file");
  plan->add_flag("--lowercase", lowercase, "Lowercase serialized text");
  plan->add_option("--bins", bins)->check(CLI::Range(1, 1000));
  add_common(plan);

  // bws-tasks
  std::vector<std::string> systems;
  std::size_t sample = 30;
  auto* bws_tasks = app.add_subcommand("bws-tasks", "Build blinded three-way BWS tasks");
  bws_tasks->add_option("--corpus", corpus_path, "Corpus JSON Lines file")->required();
  bws_tasks->add_option("--predictions", prediction_paths, "Predictions JSON Lines files")
      ->required()
      ->check(CLI::ExistingFile);
  bws_tasks->add_option("--systems", systems, "The three systems to compare")
      ->required()
      ->delimiter(',');
  bws_tasks->add_option("--sample", sample, "Instances to sample")->check(CLI::Range(1, 1000000));
  add_common(bws_tasks, true);

  // bws-score
  std::string tasks_path, judgments_path;
  auto* bws_score = app.add_subcommand("bws-score", "Score BWS judgments and agreement");
  bws_score->add_option("--tasks", tasks_path, "Tasks JSON Lines file")
      ->required()
      ->check(CLI::ExistingFile);
  bws_score->add_option("--judgments", judgments_path, "Judgment store JSON Lines file")
      ->required();
  add_common(bws_score);

  // serve
  ServiceConfig scfg;
  auto* serve = app.add_subcommand(
      "serve", "Serve BWS tasks over HTTP (SCIPRESS_PORT, SCIPRESS_STORE override)");
  serve->add_option("--tasks", tasks_path, "Tasks JSON Lines file")
      ->required()
      ->check(CLI::ExistingFile);
  serve->add_option("--store", scfg.store_path, "Judgment store JSON Lines file");
  serve->add_option("--static", scfg.static_dir, "Annotator UI asset directory");
  serve->add_option("--host", scfg.host);
  serve->add_option("--port", scfg.port)->check(CLI::Range(1, 65535));

  // report
  ReportOptions ropt;
  auto* report = app.add_subcommand("report", "Corpus report as Markdown and JSON");
  report->add_option("--corpus", corpus_path, "Corpus JSON Lines file")->required();
  report->add_flag("--all", ropt.all, "Add entities, discourse roles and baselines");
  report->add_option("--entities", entities_path, "Entity annotation JSON Lines file");
  report->add_option("--labels", labels_path, "Rhetorical role labels JSON Lines file");
  report->add_option("--familiar-words", familiar_path, "Familiar word list");
  report->add_option("--n", ropt.baseline.n, "Sentences per baseline summary")
      ->check(CLI::Range(1, 1000));
  report->add_option("--resamples", ropt.resamples)->check(CLI::Range(1, 1000000));
  add_common(report, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    Run run(sub, common, command, err);

    if (sub == ingest) {
      const auto corpus = Corpus(run, corpus_path, source_filter);
      nlohmann::json j;
      j["instances"] = corpus.size();
      std::map<std::string, std::size_t> sources;
      for (const auto& inst : corpus) ++sources[inst.article.source];
      j["sources"] = sources;
      for (Side s : kAllSides) j["sides"][SideName(s)] = StatsJson(ComputeCorpusStats(corpus, s));
      run.Write("ingest.json", j.dump(2) + "\n");
      out << j.dump(2) << "\n";
    } else if (sub == stats) {
      const auto corpus = Corpus(run, corpus_path);
      std::vector<Side> sides;
      for (const auto& s : stat_sides) sides.push_back(ToSide(s));
      if (sides.empty()) sides.assign(kAllSides.begin(), kAllSides.end());
      nlohmann::json j = nlohmann::json::object();
      std::vector<EntityAnnotation> ents;
      if (!entities_path.empty()) {
        run.Input(entities_path);
        ents = LoadEntityAnnotations(entities_path);
      }
      for (Side s : sides) {
        nlohmann::json e = StatsJson(ComputeCorpusStats(corpus, s));
        e["side"] = SideName(s);
        if (!entities_path.empty() && (s == Side::kPrSummary || s == Side::kSciAbstract)) {
          for (const auto& [t, v] : EntityDistribution(corpus, ents, s)) {
            e["entities"][EntityTypeName(t)] = v;
          }
        }
        j[SideName(s)] = e;
      }
      if (sides.size() == 1) j = j.begin().value();
      run.Write("stats.json", j.dump(2) + "\n");
      out << j.dump(2) << "\n";
    } else if (sub == readability) {
      const auto corpus = Corpus(run, corpus_path);
      const auto list = WordList(run, familiar_path);
      nlohmann::json j = nlohmann::json::object();
      std::map<Side, std::vector<double>> averages;
      for (const auto& name : read_sides) {
        const Side s = ToSide(name);
        const auto rows = ReadabilityRows(corpus, s, list, common.jobs);
        std::string csv = "id,fkgl,cli,dcrs,gunning,average\n";
        for (const auto& r : rows) {
          csv += r.id + "," + Fixed(r.report.fkgl, 6) + "," + Fixed(r.report.cli, 6) + "," +
                 Fixed(r.report.dcrs, 6) + "," + Fixed(r.report.gunning, 6) + "," +
                 Fixed(r.report.average, 6) + "\n";
          averages[s].push_back(r.report.average);
        }
        run.Write("readability_" + FileStem(s) + ".csv", csv);
        j[SideName(s)] = ReadabilityJson(MacroAverage(rows));
      }
      if (averages.count(Side::kSciAbstract) && averages.count(Side::kPrSummary)) {
        const auto mw = MannWhitney(averages[Side::kSciAbstract], averages[Side::kPrSummary]);
        j["mann_whitney_average"] = {{"u", mw.statistic}, {"p", *mw.p_value},
                                     {"significant", mw.significant}};
      }
      run.Write("readability.json", j.dump(2) + "\n");
      out << j.dump(2) << "\n";
    } else if (sub == extractivity) {
      const auto corpus = Corpus(run, corpus_path);
      const SourceDoc src = source_doc == "input" ? SourceDoc::kInput
                            : source_doc == "body" ? SourceDoc::kBody
                                                   : SourceDoc::kAuto;
      nlohmann::json j = nlohmann::json::object();
      for (const auto& name : ext_sides) {
        const Side s = ToSide(name);
        const auto rows = ExtractivityRows(corpus, s, src, common.jobs);
        run.Write("extractivity_" + FileStem(s) + ".csv", ExtractivityCsv(rows));
        run.Write("histogram_" + FileStem(s) + ".json",
                  HistogramJson(rows, cov_bins, den_bins, den_max).dump(2) + "\n");
        const auto sum = Summarize(rows);
        j[SideName(s)] = {{"coverage", sum.coverage},  {"density", sum.density},
                          {"novel1", sum.novel[0]},    {"novel2", sum.novel[1]},
                          {"novel3", sum.novel[2]}};
      }
      run.Write("extractivity.json", j.dump(2) + "\n");
      out << j.dump(2) << "\n";
    } else if (sub == baseline) {
      const auto corpus = Corpus(run, corpus_path);
      bcfg.seed = common.seed;
      const auto sys = *ParseBaseline(system);
      if (sys == BaselineSystem::kRandom) run.Seed("random", "DeriveSeed(seed, instance_id)");
      run.Note("objective", "oracle: rouge1_f1 + rouge2_f1; textrank: natural log");
      const auto preds = RunBaselineOnCorpus(corpus, sys, bcfg, common.jobs);
      std::string jsonl;
      std::size_t degenerate = 0;
      for (const auto& p : preds) {
        jsonl += PredictionJson(p).dump() + "\n";
        degenerate += p.degenerate_graph ? 1 : 0;
      }
      run.Write("predictions.jsonl", jsonl);
      out << system << ": " << preds.size() << " summaries";
      if (degenerate) out << ", " << degenerate << " degenerate graphs fell back to lead";
      out << "\n";
    } else if (sub == evaluate) {
      const auto corpus = Corpus(run, corpus_path);
      PredictionSet preds;
      for (const auto& p : prediction_paths) {
        run.Input(p);
        LoadPredictions(p, preds);
      }
      StyleModel model;
      if (style_model_path.empty()) {
        model = TrainStyleOnCorpus(corpus, DeriveSeed(common.seed, "style"));
        run.Note("style_model", "trained on --corpus");
      } else {
        run.Input(style_model_path);
        model = StyleModel::FromJson(nlohmann::json::parse(ReadFile(style_model_path)));
      }
      std::vector<SystemEvaluation> evals;
      for (const auto& s : preds.systems) {
        evals.push_back(EvaluateSystem(corpus, s, preds.by_system.at(s), model, common.jobs));
      }
      AddSignificance(evals, resamples, level, common.seed);
      run.Seed("bootstrap", "DeriveSeed(seed, \"bootstrap:<system>:<other>:<metric>\")");
      run.Write("metrics.csv", MetricsCsv(evals));
      run.Write("metrics.json", EvaluationJson(evals).dump(2) + "\n");
      run.Write("scores.csv", InstanceScoresCsv(evals));
      out << MetricsCsv(evals);
    } else if (sub == style) {
      auto corpus = Corpus(run, corpus_path);
      std::vector<AlignedInstance> train, held;
      if (!eval_corpus_path.empty()) {
        train = std::move(corpus);
        held = Corpus(run, eval_corpus_path);
      } else {
        const auto k = static_cast<std::size_t>(holdout * static_cast<double>(corpus.size()));
        SplitMix64 rng(DeriveSeed(common.seed, "style-holdout"));
        const auto idx = SampleWithoutReplacement(corpus.size(), k, rng);
        std::vector<bool> is_held(corpus.size(), false);
        for (auto i : idx) is_held[i] = true;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          (is_held[i] ? held : train).push_back(corpus[i]);
        }
        run.Seed("holdout", "DeriveSeed(seed, \"style-holdout\")");
      }
      const auto model = TrainStyleOnCorpus(train, DeriveSeed(common.seed, "style"));
      nlohmann::json ev = {{"train_instances", train.size()}, {"eval_instances", held.size()},
                           {"vocabulary", model.vocabulary_size()}};
      if (!held.empty()) {
        std::vector<double> pr, sci;
        for (const auto& inst : held) {
          pr.push_back(StyleScore(model, inst.press.summary));
          sci.push_back(StyleScore(model, inst.article.abstract));
        }
        ev["pr_summary_mean"] = Mean(pr);
        ev["sci_abstract_mean"] = Mean(sci);
      }
      run.Write("style_model.json", model.ToJson().dump() + "\n");
      run.Write("style_eval.json", ev.dump(2) + "\n");
      out << ev.dump(2) << "\n";
    } else if (sub == plan) {
      const auto corpus = Corpus(run, corpus_path);
      LabelIndex labels;
      if (!labels_path.empty()) {
        run.Input(labels_path);
        labels = IndexLabels(LoadLabels(labels_path));
      }
      std::string jsonl;
      std::vector<std::vector<RoleGroup>> sci_seq, pr_seq;
      std::map<std::string, std::map<std::string, std::size_t>> labelers;
      for (const auto& inst : corpus) {
        const auto p = SerializeInstance(inst, labels, lowercase);
        jsonl += nlohmann::json{{"instance_id", p.instance_id},
                                {"input", p.input},
                                {"target", p.target},
                                {"labeler", {{"input", LabelerName(p.input_labeler)},
                                             {"plan", LabelerName(p.plan_labeler)}}}}
                     .dump() +
                 "\n";
        const auto sci = LabelsFor(inst, inst.article.abstract, "SCI_ABSTRACT", labels);
        const auto pr = LabelsFor(inst, inst.press.summary, "PR_SUMMARY", labels);
        sci_seq.push_back(sci.groups);
        pr_seq.push_back(pr.groups);
        ++labelers["SCI_ABSTRACT"][std::string(LabelerName(sci.labeler))];
        ++labelers["PR_SUMMARY"][std::string(LabelerName(pr.labeler))];
        ++labelers["SCI_INPUT"][std::string(LabelerName(p.input_labeler))];
      }
      const auto sci_d = ComputePlanDistribution(sci_seq, bins);
      const auto pr_d = ComputePlanDistribution(pr_seq, bins);
      nlohmann::json j = {{"SCI_ABSTRACT", DistributionJson(sci_d)},
                          {"PR_SUMMARY", DistributionJson(pr_d)},
                          {"labelers", labelers}};
      std::string csv = "side,role,bin,share\n";
      for (const auto& [name, d] : {std::pair{"SCI_ABSTRACT", &sci_d}, {"PR_SUMMARY", &pr_d}}) {
        for (Role r : kRoles) {
          for (std::size_t b = 0; b < bins; ++b) {
            csv += std::string(name) + "," + std::string(RoleName(r)) + "," + std::to_string(b) +
                   "," + Fixed(d->share.at(r)[b], 6) + "\n";
          }
        }
      }
      run.Write("pairs.jsonl", jsonl);
      run.Write("plan_distribution.json", j.dump(2) + "\n");
      run.Write("plan_distribution.csv", csv);
      out << corpus.size() << " pairs; CONCLUSIONS mean position: Sci "
          << Fixed(MeanPosition(sci_d, Role::kConclusions), 3) << ", PR "
          << Fixed(MeanPosition(pr_d, Role::kConclusions), 3) << "\n";
    } else if (sub == bws_tasks) {
      const auto corpus = Corpus(run, corpus_path);
      PredictionSet preds;
      for (const auto& p : prediction_paths) {
        run.Input(p);
        LoadPredictions(p, preds);
      }
      SplitMix64 rng(DeriveSeed(common.seed, "bws-sample"));
      const auto idx =
          SampleWithoutReplacement(corpus.size(), std::min(sample, corpus.size()), rng);
      std::vector<AlignedInstance> picked;
      for (auto i : idx) picked.push_back(corpus[i]);
      const auto tasks = MakeTasks(picked, preds.by_system, systems, common.seed);
      std::string jsonl;
      for (const auto& t : tasks) jsonl += t.ToJson().dump() + "\n";
      run.Seed("sample", "DeriveSeed(seed, \"bws-sample\")");
      run.Seed("slots", "DeriveSeed(seed, \"bws:\" + instance_id)");
      run.Write("tasks.jsonl", jsonl);
      out << tasks.size() << " tasks\n";
    } else if (sub == bws_score) {
      run.Input(tasks_path);
      const TaskSet tasks = LoadTasks(tasks_path);
      if (fs::exists(judgments_path)) run.Input(judgments_path);
      const JudgmentStore store(judgments_path);
      const auto results = ComputeResults(store.Snapshot(), tasks);
      run.Write("bws_scores.csv", ScoresCsv(results.scores));
      run.Write("bws_results.json", ResultsToJson(results).dump(2) + "\n");
      out << ScoresCsv(results.scores);
    } else if (sub == serve) {
      scfg = ApplyServiceEnv(scfg);
      BwsService service(LoadTasks(tasks_path), scfg);
      err << "serving " << tasks_path << " on http://" << scfg.host << ":" << scfg.port
          << " (store " << scfg.store_path << ")\n";
      if (!service.Listen()) throw Error(ErrorCode::kIo, "cannot listen on port " +
                                                             std::to_string(scfg.port));
      return 0;
    } else if (sub == report) {
      const auto corpus = Corpus(run, corpus_path);
      ropt.corpus_name = fs::path(corpus_path).filename().string();
      ropt.seed = common.seed;
      ropt.jobs = common.jobs;
      ropt.baseline.seed = common.seed;
      const auto list = WordList(run, familiar_path);
      std::vector<EntityAnnotation> ents;
      if (!entities_path.empty()) {
        run.Input(entities_path);
        ents = LoadEntityAnnotations(entities_path);
        ropt.entities = &ents;
      }
      LabelIndex labels;
      if (!labels_path.empty()) {
        run.Input(labels_path);
        labels = IndexLabels(LoadLabels(labels_path));
      }
      ropt.labels = &labels;
      const auto r = BuildReport(corpus, list, ropt);
      run.Write("report.md", r.markdown);
      run.Write("report.json", r.json.dump(2) + "\n");
      out << r.markdown;
    }
    run.Finish();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidConfig ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace scipress::cli

#endif  // SCIPRESS_CLI_HPP_

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

// One Markdown + JSON report over a corpus: size statistics, readability and
// abstractiveness of abstracts vs. press summaries, extractivity, and with
// `all` set, entities, discourse-role positions and the baselines.

#ifndef SCIPRESS_REPORT_HPP_
#define SCIPRESS_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "scipress/analysis.hpp"

namespace scipress {

struct ReportOptions {
  bool all = false;
  std::string corpus_name;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  BaselineConfig baseline;
  std::size_t resamples = 1000;
  const std::vector<EntityAnnotation>* entities = nullptr;
  const LabelIndex* labels = nullptr;
};

struct Report {
  std::string markdown;
  nlohmann::json json;
};

namespace detail {

inline std::string PValue(double p) { return p < 1e-4 ? "<0.0001" : Fixed(p, 4); }

inline std::string Row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

inline std::string Rule(const std::vector<bool>& right) {
  std::string out = "|";
  for (bool r : right) out += r ? " ---: |" : " --- |";
  return out + "\n";
}

inline std::string SideLabel(Side s) {
  switch (s) {
    case Side::kPrSummary: return "PR summary";
    case Side::kPrArticle: return "PR article";
    case Side::kSciBody: return "Sci body";
    case Side::kSciAbstract: return "Sci abstract";
  }
  return "";
}

}  // namespace detail

inline Report BuildReport(const std::vector<AlignedInstance>& corpus,
                          const FamiliarWordList& list, const ReportOptions& opt) {
  using detail::Row;
  using detail::Rule;
  Report rep;
  auto& md = rep.markdown;
  auto& js = rep.json;
  md += "# Corpus report\n\n";
  md += "Corpus: " + opt.corpus_name + " (" + std::to_string(corpus.size()) + " instances)\n\n";
  js["corpus"] = {{"name", opt.corpus_name}, {"instances", corpus.size()}};

  md += "## Corpus statistics\n\nMeans per document; tokens include punctuation.\n\n";
  md += Row({"Side", "Docs", "Tokens", "Sentences"}) + Rule({false, true, true, true});
  for (Side s : {Side::kSciAbstract, Side::kSciBody, Side::kPrSummary, Side::kPrArticle}) {
    const auto st = ComputeCorpusStats(corpus, s);
    md += Row({detail::SideLabel(s), std::to_string(st.docs), Fixed(st.mean_words, 2),
               Fixed(st.mean_sentences, 2)});
    js["stats"][SideName(s)] = {{"docs", st.docs},
                                {"mean_words", st.mean_words},
                                {"mean_sentences", st.mean_sentences}};
  }

  // Readability and novelty, Sci abstract vs PR summary.
  const auto sci_read = ReadabilityRows(corpus, Side::kSciAbstract, list, opt.jobs);
  const auto pr_read = ReadabilityRows(corpus, Side::kPrSummary, list, opt.jobs);
  const auto sci_ext = ExtractivityRows(corpus, Side::kSciAbstract, SourceDoc::kAuto, opt.jobs);
  const auto pr_ext = ExtractivityRows(corpus, Side::kPrSummary, SourceDoc::kAuto, opt.jobs);

  md += "\n## Readability and abstractiveness\n\n";
  md += "Macro-averages per document. Novel n-grams of the abstract are counted against the "
        "article body, those of the press summary against the abstract and introduction. "
        "p: two-sided Mann-Whitney test over documents.\n\n";
  md += Row({"Measure", "Sci abstract", "PR summary", "p"}) + Rule({false, true, true, true});
  auto column = [](const std::vector<ReadabilityRow>& rows, double ReadabilityReport::*m) {
    std::vector<double> v;
    for (const auto& r : rows) v.push_back(r.report.*m);
    return v;
  };
  const std::pair<const char*, double ReadabilityReport::*> read_fields[] = {
      {"FKGL", &ReadabilityReport::fkgl},
      {"CLI", &ReadabilityReport::cli},
      {"DCRS", &ReadabilityReport::dcrs},
      {"Gunning", &ReadabilityReport::gunning},
      {"Average", &ReadabilityReport::average}};
  for (const auto& [name, m] : read_fields) {
    const auto a = column(sci_read, m);
    const auto b = column(pr_read, m);
    const auto mw = MannWhitney(a, b);
    md += Row({name, Fixed(Mean(a), 2), Fixed(Mean(b), 2), detail::PValue(*mw.p_value)});
    js["readability"][name] = {{"sci_abstract", Mean(a)},
                               {"pr_summary", Mean(b)},
                               {"mann_whitney_p", *mw.p_value}};
  }
  const char* novel_names[] = {"Novel unigrams (%)", "Novel bigrams (%)", "Novel trigrams (%)"};
  for (std::size_t n = 0; n < 3; ++n) {
    std::vector<double> a, b;
    for (const auto& r : sci_ext) {
      if (r.novel[n]) a.push_back(*r.novel[n]);
    }
    for (const auto& r : pr_ext) {
      if (r.novel[n]) b.push_back(*r.novel[n]);
    }
    const auto mw = MannWhitney(a, b);
    md += Row({novel_names[n], Fixed(Mean(a), 2), Fixed(Mean(b), 2), detail::PValue(*mw.p_value)});
    js["novelty"]["novel" + std::to_string(n + 1)] = {{"sci_abstract", Mean(a)},
                                                      {"pr_summary", Mean(b)},
                                                      {"mann_whitney_p", *mw.p_value}};
  }

  md += "\n## Extractivity\n\n";
  md += Row({"Side", "Coverage", "Density"}) + Rule({false, true, true});
  for (const auto& [s, rows] : {std::pair{Side::kSciAbstract, &sci_ext}, {Side::kPrSummary, &pr_ext}}) {
    const auto sum = Summarize(*rows);
    md += Row({detail::SideLabel(s), Fixed(sum.coverage, 3), Fixed(sum.density, 3)});
    js["extractivity"][SideName(s)] = {{"coverage", sum.coverage}, {"density", sum.density}};
  }

  if (!opt.all) return rep;

  if (opt.entities) {
    md += "\n## Named entities\n\nMean annotated entities per document.\n\n";
    md += Row({"Type", "Sci abstract", "PR summary"}) + Rule({false, true, true});
    const auto sci = EntityDistribution(corpus, *opt.entities, Side::kSciAbstract);
    const auto pr = EntityDistribution(corpus, *opt.entities, Side::kPrSummary);
    for (EntityType t : kEntityTypes) {
      md += Row({std::string(EntityTypeName(t)), Fixed(sci.at(t), 2), Fixed(pr.at(t), 2)});
      js["entities"][EntityTypeName(t)] = {{"sci_abstract", sci.at(t)}, {"pr_summary", pr.at(t)}};
    }
  }

  {
    const LabelIndex empty;
    const LabelIndex& labels = opt.labels ? *opt.labels : empty;
    std::vector<std::vector<RoleGroup>> sci_seq, pr_seq;
    std::size_t from_file = 0;
    for (const auto& inst : corpus) {
      const auto sci = LabelsFor(inst, inst.article.abstract, "SCI_ABSTRACT", labels);
      const auto pr = LabelsFor(inst, inst.press.summary, "PR_SUMMARY", labels);
      from_file += (sci.labeler == Labeler::kFile) + (pr.labeler == Labeler::kFile);
      sci_seq.push_back(sci.groups);
      pr_seq.push_back(pr.groups);
    }
    const auto sci_d = ComputePlanDistribution(sci_seq, 10);
    const auto pr_d = ComputePlanDistribution(pr_seq, 10);
    const std::string labeler = from_file == 2 * corpus.size() ? "label file"
                                : from_file == 0              ? "heuristic labeler"
                                                              : "label file with heuristic fallback";
    md += "\n## Discourse roles\n\nMean relative position (0 = start, 1 = end) of each role; "
          "labels from the " + labeler + ".\n\n";
    md += Row({"Role", "Sci abstract", "PR summary"}) + Rule({false, true, true});
    for (Role r : kRoles) {
      md += Row({std::string(RoleName(r)), Fixed(MeanPosition(sci_d, r), 3),
                 Fixed(MeanPosition(pr_d, r), 3)});
    }
    js["discourse"] = {{"labeler", labeler},
                       {"SCI_ABSTRACT", DistributionJson(sci_d)},
                       {"PR_SUMMARY", DistributionJson(pr_d)}};
  }

  {
    BaselineConfig cfg = opt.baseline;
    cfg.seed = opt.seed;
    const StyleModel style = TrainStyleOnCorpus(corpus, DeriveSeed(opt.seed, "style"));
    std::vector<SystemEvaluation> evals;
    for (auto sys : {BaselineSystem::kAbstract, BaselineSystem::kOracle, BaselineSystem::kLead,
                     BaselineSystem::kRandom, BaselineSystem::kLexRank, BaselineSystem::kTextRank}) {
      std::map<std::string, std::string> preds;
      for (const auto& p : RunBaselineOnCorpus(corpus, sys, cfg, opt.jobs)) {
        preds[p.instance_id] = p.summary;
      }
      evals.push_back(EvaluateSystem(corpus, std::string(BaselineName(sys)), preds, style, opt.jobs));
    }
    AddSignificance(evals, opt.resamples, 0.95, opt.seed);
    md += "\n## Baselines\n\nReference: PR summary. ROUGE F1 x 100, n = " +
          std::to_string(cfg.n) + ". Style: mean P(press) per sentence under a classifier "
          "trained on this corpus. CI: 95% paired bootstrap of the R1 difference to the "
          "system with the closest R1.\n\n";
    md += Row({"System", "R1", "R2", "RL", "Style", "vs.", "R1 diff CI", "Sig."}) +
          Rule({false, true, true, true, true, false, false, false});
    for (const auto& e : evals) {
      std::vector<std::string> cells = {e.system, Fixed(100 * e.r1, 2), Fixed(100 * e.r2, 2),
                                        Fixed(100 * e.rl, 2), Fixed(e.style, 2)};
      auto it = e.significance.find("r1");
      if (it == e.significance.end()) {
        cells.insert(cells.end(), {"-", "-", "-"});
      } else {
        const auto& s = it->second;
        cells.insert(cells.end(),
                     {*e.compared_to,
                      "[" + Fixed(100 * *s.ci_low, 2) + ", " + Fixed(100 * *s.ci_high, 2) + "]",
                      s.significant ? "yes" : "no"});
      }
      md += Row(cells);
    }
    js["baselines"] = EvaluationJson(evals);
    js["baseline_config"] = {{"n", cfg.n},
                             {"damping", cfg.damping},
                             {"convergence_eps", cfg.convergence_eps},
                             {"max_iters", cfg.max_iters},
                             {"oracle_pad", cfg.oracle_pad},
                             {"resamples", opt.resamples}};
  }
  return rep;
}

}  // namespace scipress

#endif  // SCIPRESS_REPORT_HPP_

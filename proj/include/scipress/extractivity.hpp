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

#ifndef SCIPRESS_EXTRACTIVITY_HPP_
#define SCIPRESS_EXTRACTIVITY_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "scipress/error.hpp"
#include "scipress/text.hpp"

namespace scipress {

struct ExtractiveFragment {
  std::size_t summary_start = 0;
  std::size_t doc_start = 0;
  std::size_t length = 0;
  friend bool operator==(const ExtractiveFragment&,
                         const ExtractiveFragment&) = default;
};

struct ExtractivityReport {
  double coverage = 0.0;
  double density = 0.0;
  std::vector<ExtractiveFragment> fragments;
};

// Greedy left-to-right fragment matching over case-folded tokens. At each
// summary position take the longest run shared with the document (earliest
// document position on ties) and jump past it; with no match, step one
// token.
inline std::vector<ExtractiveFragment> ExtractiveFragments(
    const std::vector<std::string>& doc,
    const std::vector<std::string>& summary) {
  if (summary.empty()) throw Error(ErrorCode::kEmptySummary, "");
  std::vector<std::string> d, s;
  d.reserve(doc.size());
  s.reserve(summary.size());
  for (const auto& t : doc) d.push_back(Fold(t));
  for (const auto& t : summary) s.push_back(Fold(t));

  // run[i][j]: length of the common run starting at summary i, doc j.
  const std::size_t n = s.size();
  const std::size_t m = d.size();
  std::vector<std::vector<std::size_t>> run(
      n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      if (s[i] == d[j]) run[i][j] = run[i + 1][j + 1] + 1;
    }
  }

  std::vector<ExtractiveFragment> out;
  std::size_t i = 0;
  while (i < n) {
    std::size_t best_len = 0;
    std::size_t best_doc = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (run[i][j] > best_len) {
        best_len = run[i][j];
        best_doc = j;
      }
    }
    if (best_len == 0) {
      ++i;
      continue;
    }
    out.push_back({i, best_doc, best_len});
    i += best_len;
  }
  return out;
}

inline ExtractivityReport MakeExtractivityReport(
    const std::vector<std::string>& doc,
    const std::vector<std::string>& summary) {
  ExtractivityReport r;
  r.fragments = ExtractiveFragments(doc, summary);
  double covered = 0.0;
  double squared = 0.0;
  for (const auto& f : r.fragments) {
    const double len = static_cast<double>(f.length);
    covered += len;
    squared += len * len;
  }
  const double total = static_cast<double>(summary.size());
  r.coverage = covered / total;
  r.density = squared / total;
  return r;
}

inline ExtractivityReport MakeExtractivityReport(const TokenizedText& doc,
                                                 const TokenizedText& summary) {
  return MakeExtractivityReport(doc.Tokens(), summary.Tokens());
}

// Percentage of summary n-gram occurrences whose n-gram never occurs in the
// document (case-folded).
inline double NovelNgrams(const std::vector<std::string>& doc,
                          const std::vector<std::string>& summary,
                          std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidConfig, "n must be >= 1");
  if (summary.size() < n) {
    throw Error(ErrorCode::kTooShort,
                "summary has fewer than " + std::to_string(n) + " tokens");
  }
  auto key = [n](const std::vector<std::string>& toks, std::size_t at) {
    std::string k;
    for (std::size_t q = 0; q < n; ++q) {
      if (q > 0) k.push_back('\x1f');
      k += Fold(toks[at + q]);
    }
    return k;
  };
  std::unordered_set<std::string> doc_set;
  for (std::size_t i = 0; i + n <= doc.size(); ++i) doc_set.insert(key(doc, i));
  std::size_t novel = 0;
  const std::size_t total = summary.size() - n + 1;
  for (std::size_t i = 0; i < total; ++i) {
    if (!doc_set.count(key(summary, i))) ++novel;
  }
  return 100.0 * static_cast<double>(novel) / static_cast<double>(total);
}

struct NoveltyReport {
  std::map<std::size_t, double> novel_pct;  // n in {1,2,3}
};

inline NoveltyReport MakeNoveltyReport(const std::vector<std::string>& doc,
                                       const std::vector<std::string>& summary) {
  NoveltyReport r;
  for (std::size_t n = 1; n <= 3; ++n) {
    r.novel_pct[n] = NovelNgrams(doc, summary, n);
  }
  return r;
}

// 2-D histogram of (coverage, density) for plotting. Coverage bins span
// [0, 1]; density bins span [0, density_max] with overflow clamped into the
// last bin.
struct CoverageDensityHistogram {
  std::size_t coverage_bins = 10;
  std::size_t density_bins = 10;
  double density_max = 8.0;
  std::vector<std::vector<std::size_t>> counts;  // [coverage][density]

  CoverageDensityHistogram(std::size_t cov_bins, std::size_t den_bins,
                           double den_max)
      : coverage_bins(cov_bins),
        density_bins(den_bins),
        density_max(den_max),
        counts(cov_bins, std::vector<std::size_t>(den_bins, 0)) {}

  void Add(double coverage, double density) {
    auto bin = [](double v, double hi, std::size_t bins) {
      if (v <= 0.0) return std::size_t{0};
      auto b = static_cast<std::size_t>(v / hi * static_cast<double>(bins));
      return std::min(b, bins - 1);
    };
    ++counts[bin(coverage, 1.0, coverage_bins)]
            [bin(density, density_max, density_bins)];
  }
};

}  // namespace scipress

#endif  // SCIPRESS_EXTRACTIVITY_HPP_

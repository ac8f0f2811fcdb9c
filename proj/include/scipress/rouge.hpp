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

// ROUGE-1/2/L over case-folded tokens. No stemming, no stopword removal,
// punctuation tokens kept; ROUGE-L is the LCS of the whole token sequences.

#ifndef SCIPRESS_ROUGE_HPP_
#define SCIPRESS_ROUGE_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "scipress/error.hpp"
#include "scipress/text.hpp"

namespace scipress {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

inline RougeScore MakeRougeScore(double overlap, double cand_total,
                                 double ref_total) {
  RougeScore r;
  r.precision = cand_total > 0 ? overlap / cand_total : 0.0;
  r.recall = ref_total > 0 ? overlap / ref_total : 0.0;
  const double sum = r.precision + r.recall;
  r.f1 = sum > 0 ? 2.0 * r.precision * r.recall / sum : 0.0;
  return r;
}

// n-gram multiset over already folded tokens.
class NgramCounts {
 public:
  NgramCounts(const std::vector<std::string>& tokens, std::size_t n) {
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string key;
      for (std::size_t q = 0; q < n; ++q) {
        if (q > 0) key.push_back('\x1f');
        key += tokens[i + q];
      }
      ++counts_[key];
      ++total_;
    }
  }

  std::size_t total() const { return total_; }

  // Clipped overlap: sum over n-grams of min(count here, count there).
  std::size_t Overlap(const NgramCounts& other) const {
    const auto& small = counts_.size() <= other.counts_.size() ? counts_
                                                               : other.counts_;
    const auto& large = &small == &counts_ ? other.counts_ : counts_;
    std::size_t overlap = 0;
    for (const auto& [k, c] : small) {
      auto it = large.find(k);
      if (it != large.end()) overlap += std::min(c, it->second);
    }
    return overlap;
  }

 private:
  std::size_t total_ = 0;
  std::unordered_map<std::string, std::size_t> counts_;
};

inline RougeScore RougeN(const std::vector<std::string>& cand_folded,
                         const std::vector<std::string>& ref_folded,
                         std::size_t n) {
  if (ref_folded.size() < n) {
    throw Error(ErrorCode::kTooShort, "reference shorter than n");
  }
  NgramCounts c(cand_folded, n);
  NgramCounts r(ref_folded, n);
  return MakeRougeScore(static_cast<double>(c.Overlap(r)),
                        static_cast<double>(c.total()),
                        static_cast<double>(r.total()));
}

inline RougeScore RougeN(const TokenizedText& candidate,
                         const TokenizedText& reference, std::size_t n) {
  return RougeN(candidate.FoldedTokens(), reference.FoldedTokens(), n);
}

inline std::size_t LcsLength(const std::vector<std::string>& a,
                             const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

inline RougeScore RougeL(const std::vector<std::string>& cand_folded,
                         const std::vector<std::string>& ref_folded) {
  if (ref_folded.empty()) throw Error(ErrorCode::kTooShort, "empty reference");
  return MakeRougeScore(static_cast<double>(LcsLength(cand_folded, ref_folded)),
                        static_cast<double>(cand_folded.size()),
                        static_cast<double>(ref_folded.size()));
}

inline RougeScore RougeL(const TokenizedText& candidate,
                         const TokenizedText& reference) {
  return RougeL(candidate.FoldedTokens(), reference.FoldedTokens());
}

struct RougeTriple {
  RougeScore r1, r2, rl;
};

inline RougeTriple RougeAll(const std::vector<std::string>& cand_folded,
                            const std::vector<std::string>& ref_folded) {
  RougeTriple t;
  t.r1 = RougeN(cand_folded, ref_folded, 1);
  t.r2 = ref_folded.size() >= 2 ? RougeN(cand_folded, ref_folded, 2)
                                : RougeScore{};
  t.rl = RougeL(cand_folded, ref_folded);
  return t;
}

}  // namespace scipress

#endif  // SCIPRESS_ROUGE_HPP_

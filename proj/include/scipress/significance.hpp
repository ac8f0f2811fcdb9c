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

#ifndef SCIPRESS_SIGNIFICANCE_HPP_
#define SCIPRESS_SIGNIFICANCE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "scipress/error.hpp"
#include "scipress/rng.hpp"

namespace scipress {

struct SignificanceResult {
  double statistic = 0.0;
  std::optional<double> p_value;  // rank test
  std::optional<double> ci_low;   // bootstrap
  std::optional<double> ci_high;
  bool significant = false;
  bool exact = false;  // rank test used the exact null distribution
};

// Paired bootstrap over instances. Resample r draws n indices from the
// stream SplitMix64(DeriveSeed(seed, r)) as `Next() % n` and records
// mean(a[idx]) - mean(b[idx]), each mean summed left to right. The sorted
// differences give the percentile interval
//   [ d[floor(R * (1 - level) / 2)], d[ceil(R * (1 + level) / 2) - 1] ].
// `statistic` is the observed mean difference.
inline SignificanceResult BootstrapCi(const std::vector<double>& a,
                                      const std::vector<double>& b,
                                      std::size_t resamples = 1000,
                                      double level = 0.95,
                                      std::uint64_t seed = 0) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  if (a.size() < 2) throw Error(ErrorCode::kTooShort, "need >= 2 pairs");
  if (resamples == 0 || !(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "resamples/level");
  }
  const std::size_t n = a.size();
  auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  std::vector<double> diffs(resamples);
  std::vector<double> ra(n), rb(n);
  for (std::size_t r = 0; r < resamples; ++r) {
    SplitMix64 rng(DeriveSeed(seed, static_cast<std::uint64_t>(r)));
    for (std::size_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(rng.Below(n));
      ra[i] = a[idx];
      rb[i] = b[idx];
    }
    diffs[r] = mean(ra) - mean(rb);
  }
  std::sort(diffs.begin(), diffs.end());
  const double R = static_cast<double>(resamples);
  // The small epsilon keeps e.g. 1000 * 0.025 from landing on 25.000000001.
  auto lo_idx = static_cast<std::size_t>(std::floor(R * (1.0 - level) / 2.0 + 1e-9));
  auto hi_idx = static_cast<std::size_t>(std::ceil(R * (1.0 + level) / 2.0 - 1e-9));
  hi_idx = hi_idx == 0 ? 0 : hi_idx - 1;
  lo_idx = std::min(lo_idx, resamples - 1);
  hi_idx = std::min(std::max(hi_idx, lo_idx), resamples - 1);

  SignificanceResult res;
  res.statistic = mean(a) - mean(b);
  res.ci_low = diffs[lo_idx];
  res.ci_high = diffs[hi_idx];
  res.significant = *res.ci_low > 0.0 || *res.ci_high < 0.0;
  return res;
}

inline double NormalSf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

namespace detail {

// Number of orderings with U = u for sample sizes (n, m), u in [0, n*m].
// Conditioning on which sample holds the largest value:
//   c(i, j, u) = c(i-1, j, u-j) + c(i, j-1, u).
// The count is symmetric in (n, m); the smaller size indexes the inner
// dimension so memory stays O(min * min * max).
inline std::vector<double> MannWhitneyCounts(std::size_t n, std::size_t m) {
  if (n > m) std::swap(n, m);
  // prev[i] = c(i, j-1, .), cur[i] = c(i, j, .)
  std::vector<std::vector<double>> prev(n + 1), cur(n + 1);
  for (std::size_t i = 0; i <= n; ++i) prev[i] = {1.0};  // j = 0
  for (std::size_t j = 1; j <= m; ++j) {
    cur[0] = {1.0};
    for (std::size_t i = 1; i <= n; ++i) {
      auto& dist = cur[i];
      dist.assign(i * j + 1, 0.0);
      const auto& a_largest = cur[i - 1];
      const auto& b_largest = prev[i];
      for (std::size_t u = 0; u < b_largest.size(); ++u) dist[u] += b_largest[u];
      for (std::size_t u = 0; u < a_largest.size(); ++u) {
        dist[u + j] += a_largest[u];
      }
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

}  // namespace detail

// Two-sided Wilcoxon-Mann-Whitney rank-sum test. `statistic` is U for
// sample a (pairs with a > b, ties counting one half). The exact null
// distribution is used when min(n, m) <= 8 and there are no ties; otherwise
// the normal approximation with tie correction and continuity correction.
inline SignificanceResult MannWhitney(const std::vector<double>& a,
                                      const std::vector<double>& b,
                                      double alpha = 0.05) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::kTooShort, "empty sample");
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t total = n + m;

  std::vector<std::pair<double, int>> pooled;
  pooled.reserve(total);
  for (double x : a) pooled.push_back({x, 0});
  for (double x : b) pooled.push_back({x, 1});
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  double rank_sum_a = 0.0;
  double tie_term = 0.0;
  bool ties = false;
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i;
    while (j < total && pooled[j].first == pooled[i].first) ++j;
    const double t = static_cast<double>(j - i);
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].second == 0) rank_sum_a += avg_rank;
    }
    if (t > 1) {
      ties = true;
      tie_term += t * t * t - t;
    }
    i = j;
  }
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const double u = rank_sum_a - nd * (nd + 1.0) / 2.0;

  SignificanceResult res;
  res.statistic = u;
  if (std::min(n, m) <= 8 && !ties) {
    const auto counts = detail::MannWhitneyCounts(n, m);
    const double all = std::accumulate(counts.begin(), counts.end(), 0.0);
    const auto ui = static_cast<std::size_t>(std::llround(u));
    double lower = 0.0, upper = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (k <= ui) lower += counts[k];
      if (k >= ui) upper += counts[k];
    }
    res.p_value = std::min(1.0, 2.0 * std::min(lower, upper) / all);
    res.exact = true;
  } else {
    const double mu = nd * md / 2.0;
    const double nt = static_cast<double>(total);
    const double var =
        nd * md / 12.0 * ((nt + 1.0) - tie_term / (nt * (nt - 1.0)));
    if (var <= 0.0) {
      res.p_value = 1.0;
    } else {
      const double z = std::max(0.0, std::fabs(u - mu) - 0.5) / std::sqrt(var);
      res.p_value = std::min(1.0, 2.0 * NormalSf(z));
    }
  }
  res.significant = *res.p_value < alpha;
  return res;
}

}  // namespace scipress

#endif  // SCIPRESS_SIGNIFICANCE_HPP_

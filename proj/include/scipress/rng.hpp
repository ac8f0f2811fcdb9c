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

#ifndef SCIPRESS_RNG_HPP_
#define SCIPRESS_RNG_HPP_

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

namespace scipress {

// SplitMix64. Chosen over <random> engines + distributions because the
// distributions are implementation-defined and every random draw in the
// pipeline must be reproducible from a script in any language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
//
// Bounded draws are `Next() % bound`.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t Below(std::uint64_t bound) { return Next() % bound; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Stream seed for a named sub-computation (an instance id, a resample
// index, ...). Stable across platforms and runs.
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view key) {
  SplitMix64 mix(seed ^ Fnv1a64(key));
  return mix.Next();
}

inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (index * 0xD1B54A32D192ED03ULL));
  return mix.Next();
}

// Uniform k-subset of [0, n) without replacement, returned ascending.
// Partial Fisher-Yates: for i in [0, k): swap(i, i + Below(n - i)).
inline std::vector<std::size_t> SampleWithoutReplacement(std::size_t n,
                                                         std::size_t k,
                                                         SplitMix64& rng) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  k = std::min(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.Below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace scipress

#endif  // SCIPRESS_RNG_HPP_

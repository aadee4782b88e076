// Copyright 2026 The cofsieve Authors
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

#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>

namespace cofsieve::testing {

/// Seed for randomized property tests; override with COFSIEVE_SEED.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("COFSIEVE_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611u;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(seed());
  return gen;
}

inline int uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

}  // namespace cofsieve::testing

#include <utility>
#include <vector>

#include "core/partition.hpp"

namespace cofsieve::testing {

/// Pairs (outer, inner) with inner ⊆ outer, inner ≠ outer and at most
/// max_cells cells in the skew shape; outer has at most max_outer cells.
inline std::vector<std::pair<Partition, Partition>> skew_pairs(int max_cells, int max_outer) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int n = 1; n <= max_outer; ++n)
    for (const auto& lam : partitions_of(n))
      for (int k = std::max(0, n - max_cells); k < n; ++k)
        for (const auto& mu : partitions_of(k)) {
          bool ok = mu.length() <= lam.length();
          for (int i = 0; ok && i < mu.length(); ++i) ok = mu[i] <= lam[i];
          if (ok) out.emplace_back(lam, mu);
        }
  return out;
}

}  // namespace cofsieve::testing

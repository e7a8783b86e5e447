// Copyright 2026 The GreedyML Authors.
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

#include "greedyml/exact.h"

#include <algorithm>
#include <limits>
#include <string>

#include "greedyml/errors.h"

namespace greedyml {

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * factor / i;
  }
  return result;
}

ExactResult ExactOptimum(const SubmodularOracle& oracle,
                         std::span<const Element> ground_in, std::size_t k,
                         bool exact_size) {
  std::vector<Element> ground(ground_in.begin(), ground_in.end());
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  const std::size_t n = ground.size();
  k = std::min(k, n);
  if (Binomial(n, k) > kMaxExactSubsets) {
    throw GuardRailError("exhaustive search over C(" + std::to_string(n) +
                         ", " + std::to_string(k) + ") subsets exceeds " +
                         std::to_string(kMaxExactSubsets));
  }

  ExactResult best;
  bool have_best = false;
  std::vector<Element> members;
  std::vector<std::size_t> pick;

  for (std::size_t size = exact_size ? k : 0; size <= k; ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      members.clear();
      for (std::size_t i : pick) members.push_back(ground[i]);
      const double value = oracle.Value(members);
      ++best.subsets_enumerated;
      if (!have_best || value > best.value ||
          (value == best.value && members < best.members)) {
        best.members = members;
        best.value = value;
        have_best = true;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return best;
}

}  // namespace greedyml

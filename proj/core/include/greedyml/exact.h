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

#ifndef GREEDYML_EXACT_H_
#define GREEDYML_EXACT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "greedyml/oracle.h"
#include "greedyml/types.h"

namespace greedyml {

inline constexpr std::uint64_t kMaxExactSubsets = 10'000'000;

struct ExactResult {
  // Ascending.
  std::vector<Element> members;
  double value = 0.0;
  std::uint64_t subsets_enumerated = 0;
};

// n choose k, saturating at UINT64_MAX.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

// Maximizes f over every subset of `ground` with at most k members (exactly
// k when `exact_size`), enumerating sizes in increasing order and each size in
// lexicographic order. Ties go to the lexicographically smallest member list.
// k is clamped to |ground|. Throws GuardRailError when C(n, k) exceeds
// kMaxExactSubsets.
ExactResult ExactOptimum(const SubmodularOracle& oracle,
                         std::span<const Element> ground, std::size_t k,
                         bool exact_size = false);

}  // namespace greedyml

#endif  // GREEDYML_EXACT_H_

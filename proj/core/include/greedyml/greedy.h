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

// Sequential greedy solvers for max f(S) s.t. |S| <= k.
//
// Both solvers add, at each step, the candidate of largest marginal gain,
// breaking ties toward the lowest element index, and stop when the budget is
// used up, the candidates run out, or the best gain is zero. LazyGreedy keeps
// stale gains in a max-heap and only refreshes the top; by diminishing
// returns a stale gain is an upper bound, so it picks exactly what Greedy
// picks while evaluating f far less often.

#ifndef GREEDYML_GREEDY_H_
#define GREEDYML_GREEDY_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "greedyml/oracle.h"
#include "greedyml/types.h"

namespace greedyml {

struct GreedyStats {
  std::uint64_t function_calls = 0;
  std::size_t selections = 0;
};

struct GreedyResult {
  Solution solution;
  GreedyStats stats;
};

// `candidates` may be unsorted and contain duplicates. Throws
// std::domain_error for a candidate outside the oracle's ground set.
GreedyResult Greedy(const SubmodularOracle& oracle,
                    const CardinalityConstraint& constraint,
                    std::span<const Element> candidates);

GreedyResult LazyGreedy(const SubmodularOracle& oracle,
                        const CardinalityConstraint& constraint,
                        std::span<const Element> candidates);

}  // namespace greedyml

#endif  // GREEDYML_GREEDY_H_

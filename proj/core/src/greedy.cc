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

#include "greedyml/greedy.h"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace greedyml {
namespace {

std::vector<Element> CanonicalCandidates(const SubmodularOracle& oracle,
                                         std::span<const Element> candidates) {
  std::vector<Element> out(candidates.begin(), candidates.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && !oracle.Contains(out.back())) {
    throw std::domain_error("candidate " + std::to_string(out.back()) +
                            " outside ground set of size " +
                            std::to_string(oracle.size()));
  }
  return out;
}

}  // namespace

GreedyResult Greedy(const SubmodularOracle& oracle,
                    const CardinalityConstraint& constraint,
                    std::span<const Element> candidates) {
  std::vector<Element> remaining = CanonicalCandidates(oracle, candidates);
  GreedyResult result;
  auto state = oracle.NewState();

  while (result.solution.size() < constraint.k() && !remaining.empty()) {
    std::size_t best = 0;
    double best_gain = -1.0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const double gain = state->Gain(remaining[i]);
      ++result.stats.function_calls;
      // Strict comparison keeps the lowest index among equal gains.
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (!IsPositiveGain(oracle, best_gain)) break;
    state->Add(remaining[best]);
    result.solution.members.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }

  result.solution.value = state->Value();
  result.stats.selections = result.solution.size();
  return result;
}

GreedyResult LazyGreedy(const SubmodularOracle& oracle,
                        const CardinalityConstraint& constraint,
                        std::span<const Element> candidates) {
  struct Entry {
    double gain;
    Element element;
    // Size of the solution when `gain` was computed.
    std::size_t epoch;
  };
  // Max-heap on gain, then min on element index.
  auto lower_priority = [](const Entry& a, const Entry& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.element > b.element;
  };

  const std::vector<Element> pool = CanonicalCandidates(oracle, candidates);
  GreedyResult result;
  auto state = oracle.NewState();

  std::vector<Entry> initial;
  initial.reserve(pool.size());
  for (Element e : pool) {
    initial.push_back({state->Gain(e), e, 0});
    ++result.stats.function_calls;
  }
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower_priority)> heap(
      lower_priority, std::move(initial));

  while (result.solution.size() < constraint.k() && !heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (top.epoch != result.solution.size()) {
      top.gain = state->Gain(top.element);
      top.epoch = result.solution.size();
      ++result.stats.function_calls;
      heap.push(top);
      continue;
    }
    // A fresh gain at the top dominates every stale upper bound below it.
    if (!IsPositiveGain(oracle, top.gain)) break;
    state->Add(top.element);
    result.solution.members.push_back(top.element);
  }

  result.solution.value = state->Value();
  result.stats.selections = result.solution.size();
  return result;
}

}  // namespace greedyml

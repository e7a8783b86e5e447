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

// Contract shared by every objective: a non-negative, monotone, submodular
// set function over a dense ground set, plus the incremental evaluator the
// greedy solvers run on.

#ifndef GREEDYML_ORACLE_H_
#define GREEDYML_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>

#include "greedyml/types.h"

namespace greedyml {

// Gains at or below this are treated as zero for real-valued objectives.
inline constexpr double kZeroGainTolerance = 1e-12;

// Number of objective evaluations. A marginal gain against a cached f(S)
// counts as one call.
struct CallCounter {
  std::uint64_t calls = 0;
  void Add(std::uint64_t n = 1) { calls += n; }
};

// Incremental evaluator positioned at some current set S.
class GainState {
 public:
  virtual ~GainState() = default;

  // f(S + e) - f(S). `e` may already be in S, in which case the gain is 0.
  virtual double Gain(Element e) const = 0;
  virtual void Add(Element e) = 0;
  // f(S).
  virtual double Value() const = 0;
};

class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  // Number of elements in the ground set; valid elements are 0..size()-1.
  virtual std::size_t size() const = 0;

  // True when f takes integer values (coverage counts). Integral objectives
  // stop greedy at an exactly-zero gain; real ones at kZeroGainTolerance.
  virtual bool integral() const = 0;

  // Units of data shipped when `e` is sent to another machine: subset size,
  // vertex degree, or feature count.
  virtual std::size_t PayloadSize(Element e) const = 0;

  virtual std::unique_ptr<GainState> NewState() const = 0;

  // f(set) evaluated from scratch. Duplicates are ignored.
  double Value(std::span<const Element> set) const;

  bool Contains(Element e) const { return e < size(); }
};

// True when a gain is large enough for greedy to keep selecting.
inline bool IsPositiveGain(const SubmodularOracle& oracle, double gain) {
  return oracle.integral() ? gain > 0.0 : gain > kZeroGainTolerance;
}

// f(S + e) - f(S). Throws std::domain_error when `e` or a member of S lies
// outside the ground set and std::invalid_argument when e is in S. Adds one
// call to `counter` when given.
double MarginalGain(const SubmodularOracle& oracle,
                    std::span<const Element> set, Element e,
                    CallCounter* counter = nullptr);

// True iff S + e is feasible under `constraint` and e is not already in S.
bool IsFeasible(const CardinalityConstraint& constraint,
                std::span<const Element> set, Element e);

}  // namespace greedyml

#endif  // GREEDYML_ORACLE_H_

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

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "greedyml/errors.h"
#include "greedyml/oracle.h"
#include "greedyml/types.h"

namespace greedyml {

GroundSet::GroundSet(std::vector<std::uint64_t> labels)
    : size_(labels.size()), labels_(std::move(labels)) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(labels_.size());
  for (std::uint64_t label : labels_) {
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate ground-set label " +
                                  std::to_string(label));
    }
  }
}

std::vector<Element> GroundSet::Elements() const {
  std::vector<Element> out(size_);
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

CardinalityConstraint::CardinalityConstraint(std::size_t k) : k_(k) {
  if (k == 0) throw ConfigError("cardinality bound k must be at least 1");
}

std::string ToString(const NodeLabel& label) {
  return "(" + std::to_string(label.level) + "," + std::to_string(label.id) +
         ")";
}

double SubmodularOracle::Value(std::span<const Element> set) const {
  auto state = NewState();
  for (Element e : set) state->Add(e);
  return state->Value();
}

double MarginalGain(const SubmodularOracle& oracle,
                    std::span<const Element> set, Element e,
                    CallCounter* counter) {
  if (!oracle.Contains(e)) {
    throw std::domain_error("element " + std::to_string(e) +
                            " outside ground set of size " +
                            std::to_string(oracle.size()));
  }
  auto state = oracle.NewState();
  for (Element s : set) {
    if (!oracle.Contains(s)) {
      throw std::domain_error("set member " + std::to_string(s) +
                              " outside ground set");
    }
    if (s == e) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " is already in the set");
    }
    state->Add(s);
  }
  if (counter != nullptr) counter->Add();
  return state->Gain(e);
}

bool IsFeasible(const CardinalityConstraint& constraint,
                std::span<const Element> set, Element e) {
  if (!constraint.Admits(set.size() + 1)) return false;
  return std::find(set.begin(), set.end(), e) == set.end();
}

}  // namespace greedyml

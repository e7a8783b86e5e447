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

#ifndef GREEDYML_TYPES_H_
#define GREEDYML_TYPES_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace greedyml {

// Dense 0-based index into a ground set.
using Element = std::uint32_t;
using MachineId = std::uint32_t;

// Ground set of `size()` dense elements, with an optional mapping back to the
// identifiers used in the input file.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::size_t n) : size_(n) {}
  // `labels[i]` is the external id of element i. Throws std::invalid_argument
  // unless the labels are pairwise distinct.
  explicit GroundSet(std::vector<std::uint64_t> labels);

  std::size_t size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  std::uint64_t label(Element e) const {
    return labels_.empty() ? e : labels_[e];
  }
  const std::vector<std::uint64_t>& labels() const { return labels_; }

  // All elements 0..n-1 in ascending order.
  std::vector<Element> Elements() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> labels_;
};

// |S| <= k. Throws ConfigError for k == 0.
class CardinalityConstraint {
 public:
  explicit CardinalityConstraint(std::size_t k);
  std::size_t k() const { return k_; }
  bool Admits(std::size_t size) const { return size <= k_; }

 private:
  std::size_t k_;
};

// (level, id) label of an accumulation-tree node.
struct NodeLabel {
  int level = 0;
  MachineId id = 0;

  friend auto operator<=>(const NodeLabel&, const NodeLabel&) = default;
};

std::string ToString(const NodeLabel& label);

struct Solution {
  // Selection order.
  std::vector<Element> members;
  double value = 0.0;
  // Unset for the sequential solver.
  std::optional<NodeLabel> origin;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }

  friend bool operator==(const Solution&, const Solution&) = default;
};

}  // namespace greedyml

#endif  // GREEDYML_TYPES_H_

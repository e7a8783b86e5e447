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

#ifndef GREEDYML_ACCUMULATION_TREE_H_
#define GREEDYML_ACCUMULATION_TREE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "greedyml/types.h"

namespace greedyml {

// Smallest L with b^L >= m. Throws ConfigError for m == 0 or b < 2.
int LevelsFor(std::size_t machines, std::size_t branching);

// Smallest b >= 2 with LevelsFor(m, b) <= levels. Throws ConfigError when no
// such b exists (levels == 0 with m > 1).
std::size_t BranchingForLevels(std::size_t machines, int levels);

// Complete b-ary tree over m leaves (machines), with L = ceil(log_b m)
// accumulation levels.
//
// Node (l, id) exists iff 0 <= l <= L, id < m and b^l divides id. A machine
// keeps its id as it climbs: (l, id) is the parent of (l-1, id), so the root
// is (L, 0). Children of (l, id) are (l-1, id + j*b^(l-1)) for j = 0..b-1,
// truncated at m. Only the last node of a level can have fewer than b
// children.
class AccumulationTree {
 public:
  // Throws ConfigError for m == 0 or b < 2.
  AccumulationTree(std::size_t machines, std::size_t branching);

  std::size_t machines() const { return machines_; }
  std::size_t branching() const { return branching_; }
  int levels() const { return levels_; }
  NodeLabel root() const { return {levels_, 0}; }

  bool Exists(const NodeLabel& node) const;

  // b^level. Throws std::domain_error if level is outside [0, L].
  std::uint64_t Stride(int level) const;

  // b^i * floor(id / b^i). Throws std::domain_error for i < 1, i > L or
  // id >= m.
  MachineId Parent(MachineId id, int level) const;

  // Machine ids of the children of (level, id), ascending; the first is id
  // itself. Throws std::domain_error for a leaf or a nonexistent node.
  std::vector<MachineId> Children(MachineId id, int level) const;

  // Highest level at which machine `id` is active: L for id 0, otherwise the
  // largest l with id mod b^l == 0. Throws std::domain_error if id >= m.
  int NodeLevel(MachineId id) const;

  // Leaves below (level, id): the contiguous range [first, last].
  struct LeafRange {
    MachineId first;
    MachineId last;
    std::size_t size() const { return last - first + 1; }
    bool contains(MachineId id) const { return first <= id && id <= last; }
    friend bool operator==(const LeafRange&, const LeafRange&) = default;
  };
  LeafRange AccessibleLeaves(MachineId id, int level) const;

  // Machine ids of the nodes at `level`, ascending.
  std::vector<MachineId> NodesAt(int level) const;

 private:
  void RequireNode(MachineId id, int level) const;

  std::size_t machines_;
  std::size_t branching_;
  int levels_;
  std::vector<std::uint64_t> strides_;  // b^0 .. b^L
};

}  // namespace greedyml

#endif  // GREEDYML_ACCUMULATION_TREE_H_

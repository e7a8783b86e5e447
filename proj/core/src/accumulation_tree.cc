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

#include "greedyml/accumulation_tree.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "greedyml/errors.h"

namespace greedyml {

int LevelsFor(std::size_t machines, std::size_t branching) {
  if (machines == 0) throw ConfigError("machine count must be at least 1");
  if (branching < 2) throw ConfigError("branching factor must be at least 2");
  int levels = 0;
  std::uint64_t reach = 1;
  while (reach < machines) {
    // reach < machines fits in size_t, so overflow means reach >= machines.
    if (reach > std::numeric_limits<std::uint64_t>::max() / branching) {
      return levels + 1;
    }
    reach *= branching;
    ++levels;
  }
  return levels;
}

std::size_t BranchingForLevels(std::size_t machines, int levels) {
  if (machines == 0) throw ConfigError("machine count must be at least 1");
  if (levels < 0) throw ConfigError("level count must be non-negative");
  if (machines == 1) return 2;
  if (levels == 0) {
    throw ConfigError("0 levels cannot cover " + std::to_string(machines) +
                      " machines");
  }
  // b = m always gives a single level, so the search terminates.
  for (std::size_t b = 2; b <= std::max<std::size_t>(machines, 2); ++b) {
    if (LevelsFor(machines, b) <= levels) return b;
  }
  return machines;
}

AccumulationTree::AccumulationTree(std::size_t machines, std::size_t branching)
    : machines_(machines),
      branching_(branching),
      levels_(LevelsFor(machines, branching)) {
  strides_.reserve(levels_ + 1);
  std::uint64_t s = 1;
  for (int l = 0; l <= levels_; ++l) {
    strides_.push_back(s);
    if (l < levels_) {
      s = s > std::numeric_limits<std::uint64_t>::max() / branching
              ? std::numeric_limits<std::uint64_t>::max()
              : s * branching;
    }
  }
}

std::uint64_t AccumulationTree::Stride(int level) const {
  if (level < 0 || level > levels_) {
    throw std::domain_error("level " + std::to_string(level) +
                            " outside [0, " + std::to_string(levels_) + "]");
  }
  return strides_[level];
}

bool AccumulationTree::Exists(const NodeLabel& node) const {
  return node.level >= 0 && node.level <= levels_ && node.id < machines_ &&
         node.id % strides_[node.level] == 0;
}

void AccumulationTree::RequireNode(MachineId id, int level) const {
  if (!Exists({level, id})) {
    throw std::domain_error("no tree node " + ToString({level, id}) +
                            " for m=" + std::to_string(machines_) +
                            ", b=" + std::to_string(branching_));
  }
}

MachineId AccumulationTree::Parent(MachineId id, int level) const {
  if (level < 1 || level > levels_) {
    throw std::domain_error("parent level " + std::to_string(level) +
                            " outside [1, " + std::to_string(levels_) + "]");
  }
  if (id >= machines_) {
    throw std::domain_error("machine id " + std::to_string(id) +
                            " out of range");
  }
  const std::uint64_t stride = strides_[level];
  return static_cast<MachineId>(stride * (id / stride));
}

std::vector<MachineId> AccumulationTree::Children(MachineId id,
                                                  int level) const {
  RequireNode(id, level);
  if (level == 0) {
    throw std::domain_error("leaf " + ToString({level, id}) +
                            " has no children");
  }
  const std::uint64_t step = strides_[level - 1];
  std::vector<MachineId> children;
  for (std::size_t j = 0; j < branching_; ++j) {
    const std::uint64_t child = id + j * step;
    if (child >= machines_) break;
    children.push_back(static_cast<MachineId>(child));
  }
  return children;
}

int AccumulationTree::NodeLevel(MachineId id) const {
  if (id >= machines_) {
    throw std::domain_error("machine id " + std::to_string(id) +
                            " out of range");
  }
  if (id == 0) return levels_;
  int level = 0;
  while (level < levels_ && id % strides_[level + 1] == 0) ++level;
  return level;
}

AccumulationTree::LeafRange AccumulationTree::AccessibleLeaves(
    MachineId id, int level) const {
  RequireNode(id, level);
  const std::uint64_t last =
      std::min<std::uint64_t>(id + strides_[level] - 1, machines_ - 1);
  return {id, static_cast<MachineId>(last)};
}

std::vector<MachineId> AccumulationTree::NodesAt(int level) const {
  const std::uint64_t stride = Stride(level);
  std::vector<MachineId> nodes;
  for (std::uint64_t id = 0; id < machines_; id += stride) {
    nodes.push_back(static_cast<MachineId>(id));
  }
  return nodes;
}

}  // namespace greedyml

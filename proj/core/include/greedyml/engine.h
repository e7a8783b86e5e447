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

// Distributed greedy over an accumulation tree.
//
// The ground set is split over m machines by a RandomTape. Every machine runs
// LazyGreedy on its part (level 0). At each level l = 1..L, every node (l, id)
// takes the union of its children's solutions, runs LazyGreedy on it, and
// keeps the better of that result and its own level l-1 solution. The root's
// output is the answer (GreedyML). RandGreedi is the one-level tree b = m
// whose root instead keeps the best of its aggregate and every leaf solution.
//
// Two executors share the node logic. kSimulate visits nodes one at a time
// in level order. kConcurrent runs every node of a level on its own thread
// and joins them before the next level. Children are always consumed in
// ascending id order, so both executors produce identical reports.
//
// k-medoid is evaluated locally: each node's oracle averages the loss only
// over the points the node holds, plus `kmedoid_extra` points sampled from the
// full data set at interior nodes.

#ifndef GREEDYML_ENGINE_H_
#define GREEDYML_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "greedyml/accumulation_tree.h"
#include "greedyml/oracle.h"
#include "greedyml/types.h"

namespace greedyml {

enum class Objective { kCover, kDominatingSet, kMedoid };
enum class Algorithm { kGreedy, kRandGreedi, kGreedyML };
enum class ExecutionMode { kSimulate, kConcurrent };

std::string ToString(Objective objective);
std::string ToString(Algorithm algorithm);
std::string ToString(ExecutionMode mode);

struct RunConfig {
  Objective objective = Objective::kCover;
  std::size_t k = 1;
  std::size_t machines = 1;
  // Exactly one of these is set when machines > 1; the other is derived.
  std::optional<std::size_t> branching;
  std::optional<int> levels;
  std::uint64_t seed = 0;
  ExecutionMode mode = ExecutionMode::kSimulate;
  std::size_t kmedoid_extra = 0;

  // Checks the invariants and returns the tree. Throws ConfigError.
  AccumulationTree ResolveTree() const;
};

struct NodeTrace {
  NodeLabel label;
  // Leaf: size of its part. Interior: distinct candidates (child members plus
  // sampled extras).
  std::size_t input_elements = 0;
  std::size_t arity = 0;
  std::uint64_t function_calls = 0;
  std::size_t solution_size = 0;
  // Members sent by children other than the node's own lower-level self.
  std::size_t elements_received = 0;
  std::size_t payload_units_received = 0;

  friend bool operator==(const NodeTrace&, const NodeTrace&) = default;
};

struct RunReport {
  Algorithm algorithm = Algorithm::kGreedyML;
  RunConfig config;
  // Resolved tree shape.
  std::size_t branching = 2;
  int levels = 0;

  Solution solution;
  // f(solution) under the full-data oracle. Equals solution.value unless the
  // objective is evaluated locally.
  double global_value = 0.0;

  // Level order, ascending id within a level.
  std::vector<NodeTrace> nodes;
  std::uint64_t total_function_calls = 0;
  // Calls made by the id-0 nodes, which lie on every leaf-to-root path.
  std::uint64_t critical_path_calls = 0;
  std::uint64_t total_communication_elements = 0;
  std::uint64_t total_communication_payload_units = 0;

  double solve_seconds = 0.0;
  std::vector<double> level_seconds;

  const NodeTrace* Find(const NodeLabel& label) const;
};

// True when two reports agree on everything except timings.
bool SameOutcome(const RunReport& a, const RunReport& b);

struct NodeOutcome {
  Solution solution;
  NodeTrace trace;
};

// One interior step. `children` are the solutions of (level-1, c) for the
// node's children c in ascending id order; children[own] is the node's own
// previous-level solution. Runs LazyGreedy over the union of child members
// and returns the better of that and children[own], preferring the fresh
// aggregate on ties. `extras` are added to the candidates (and, for
// k-medoid, to the evaluation set). Throws IntegrityError for an infeasible
// child solution.
NodeOutcome AggregateNode(NodeLabel node, std::span<const Solution> children,
                          std::size_t own, const SubmodularOracle& oracle,
                          const CardinalityConstraint& constraint,
                          std::span<const Element> extras = {});

// Runs over `ground` (all elements when omitted). Throws ConfigError for an
// invalid config or an empty ground set.
RunReport RunGreedyML(const RunConfig& config, const SubmodularOracle& oracle);
RunReport RunGreedyML(const RunConfig& config, const SubmodularOracle& oracle,
                      std::span<const Element> ground);

// Ignores config.branching / config.levels and uses b = m.
RunReport RunRandGreedi(const RunConfig& config, const SubmodularOracle& oracle);
RunReport RunRandGreedi(const RunConfig& config, const SubmodularOracle& oracle,
                        std::span<const Element> ground);

// Sequential LazyGreedy reported as a single-node tree.
RunReport RunSequential(const RunConfig& config, const SubmodularOracle& oracle);

RunReport Run(Algorithm algorithm, const RunConfig& config,
              const SubmodularOracle& oracle);

// Seed for the extras sampled at `node`.
std::uint64_t NodeSeed(std::uint64_t run_seed, const NodeLabel& node);

}  // namespace greedyml

#endif  // GREEDYML_ENGINE_H_

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

#include "greedyml/engine.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "greedyml/errors.h"
#include "greedyml/greedy.h"
#include "greedyml/objectives.h"
#include "greedyml/random_tape.h"

namespace greedyml {

std::string ToString(Objective objective) {
  switch (objective) {
    case Objective::kCover:
      return "kcover";
    case Objective::kDominatingSet:
      return "kdom";
    case Objective::kMedoid:
      return "kmedoid";
  }
  return "unknown";
}

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kRandGreedi:
      return "randgreedi";
    case Algorithm::kGreedyML:
      return "greedyml";
  }
  return "unknown";
}

std::string ToString(ExecutionMode mode) {
  return mode == ExecutionMode::kSimulate ? "simulate" : "concurrent";
}

AccumulationTree RunConfig::ResolveTree() const {
  if (k == 0) throw ConfigError("k must be at least 1");
  if (machines == 0) throw ConfigError("machine count must be at least 1");
  if (branching.has_value() && levels.has_value()) {
    throw ConfigError("give either a branching factor or a level count, not both");
  }
  if (branching.has_value()) {
    if (*branching < 2) throw ConfigError("branching factor must be at least 2");
    return AccumulationTree(machines, *branching);
  }
  if (levels.has_value()) {
    return AccumulationTree(machines, BranchingForLevels(machines, *levels));
  }
  if (machines > 1) {
    throw ConfigError("a branching factor or a level count is required");
  }
  return AccumulationTree(1, 2);
}

const NodeTrace* RunReport::Find(const NodeLabel& label) const {
  for (const NodeTrace& t : nodes) {
    if (t.label == label) return &t;
  }
  return nullptr;
}

bool SameOutcome(const RunReport& a, const RunReport& b) {
  return a.algorithm == b.algorithm && a.branching == b.branching &&
         a.levels == b.levels && a.solution == b.solution &&
         a.global_value == b.global_value && a.nodes == b.nodes &&
         a.total_function_calls == b.total_function_calls &&
         a.critical_path_calls == b.critical_path_calls &&
         a.total_communication_elements == b.total_communication_elements &&
         a.total_communication_payload_units ==
             b.total_communication_payload_units;
}

std::uint64_t NodeSeed(std::uint64_t run_seed, const NodeLabel& node) {
  const std::uint64_t label =
      (static_cast<std::uint64_t>(node.level) << 32) | node.id;
  return SplitMix64Mix(run_seed ^ SplitMix64Mix(label + kGoldenGamma));
}

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const KMedoidOracle* AsMedoid(const SubmodularOracle& oracle) {
  return dynamic_cast<const KMedoidOracle*>(&oracle);
}

void CheckChild(const Solution& child, const SubmodularOracle& oracle,
                const CardinalityConstraint& constraint, NodeLabel node) {
  if (!constraint.Admits(child.size())) {
    throw IntegrityError("node " + ToString(node) + " received " +
                         std::to_string(child.size()) +
                         " members, above k=" + std::to_string(constraint.k()));
  }
  std::unordered_set<Element> seen;
  for (Element e : child.members) {
    if (!oracle.Contains(e) || !seen.insert(e).second) {
      throw IntegrityError("node " + ToString(node) +
                           " received an invalid member " + std::to_string(e));
    }
  }
}

std::vector<Element> SortedUnion(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// When `against_all_children` is set the aggregate competes with every child
// (RandGreedi's root); otherwise only with children[own].
NodeOutcome Aggregate(NodeLabel node, std::span<const Solution> children,
                      std::size_t own, const SubmodularOracle& oracle,
                      const CardinalityConstraint& constraint,
                      std::span<const Element> extras,
                      bool against_all_children) {
  if (own >= children.size()) {
    throw std::invalid_argument("own-solution index outside child list");
  }
  NodeOutcome out;
  NodeTrace& trace = out.trace;
  trace.label = node;
  trace.arity = children.size();

  std::vector<Element> pool;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const Solution& child = children[i];
    CheckChild(child, oracle, constraint, node);
    pool.insert(pool.end(), child.members.begin(), child.members.end());
    if (i == own) continue;
    trace.elements_received += child.size();
    for (Element e : child.members) {
      trace.payload_units_received += oracle.PayloadSize(e);
    }
  }
  pool.insert(pool.end(), extras.begin(), extras.end());
  const std::vector<Element> candidates = SortedUnion(std::move(pool));
  trace.input_elements = candidates.size();

  std::optional<KMedoidOracle> local;
  const SubmodularOracle* evaluator = &oracle;
  if (const KMedoidOracle* medoid = AsMedoid(oracle);
      medoid != nullptr && !candidates.empty()) {
    local.emplace(medoid->Localize(candidates, {}));
    evaluator = &*local;
  }

  GreedyResult fresh = LazyGreedy(*evaluator, constraint, candidates);
  std::uint64_t calls = fresh.stats.function_calls;
  Solution best = std::move(fresh.solution);
  best.origin = node;

  // Rival values from another evaluation set must be recomputed here.
  auto consider = [&](const Solution& rival) {
    double value = rival.value;
    if (local.has_value() && !rival.empty()) {
      value = local->Value(rival.members);
      ++calls;
    }
    if (value > best.value) {
      best = rival;
      best.value = value;
    }
  };
  if (against_all_children) {
    for (const Solution& child : children) consider(child);
  } else {
    consider(children[own]);
  }

  trace.function_calls = calls;
  trace.solution_size = best.size();
  out.solution = std::move(best);
  return out;
}

NodeOutcome RunLeaf(MachineId id, std::span<const Element> part,
                    const SubmodularOracle& oracle,
                    const CardinalityConstraint& constraint) {
  NodeOutcome out;
  out.trace.label = {0, id};
  out.trace.input_elements = part.size();
  out.solution.origin = NodeLabel{0, id};
  if (part.empty()) return out;

  std::optional<KMedoidOracle> local;
  const SubmodularOracle* evaluator = &oracle;
  if (const KMedoidOracle* medoid = AsMedoid(oracle); medoid != nullptr) {
    local.emplace(medoid->Localize(part, {}));
    evaluator = &*local;
  }
  GreedyResult result = LazyGreedy(*evaluator, constraint, part);
  out.solution = std::move(result.solution);
  out.solution.origin = NodeLabel{0, id};
  out.trace.function_calls = result.stats.function_calls;
  out.trace.solution_size = out.solution.size();
  return out;
}

// Runs fn(0..count-1), one thread per index in concurrent mode. Returning
// from this call is the level barrier.
template <typename Fn>
void ForEachNode(ExecutionMode mode, std::size_t count, Fn fn) {
  if (mode == ExecutionMode::kSimulate) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> workers;
    workers.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      workers.emplace_back([&fn, &errors, i] {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

std::vector<Element> CheckedGround(const SubmodularOracle& oracle,
                                   std::span<const Element> ground) {
  std::vector<Element> out = SortedUnion({ground.begin(), ground.end()});
  if (out.empty()) throw ConfigError("the ground set is empty");
  if (!oracle.Contains(out.back())) {
    throw ConfigError("ground element " + std::to_string(out.back()) +
                      " outside the oracle's range");
  }
  return out;
}

RunReport Execute(Algorithm algorithm, const RunConfig& config,
                  const AccumulationTree& tree, const SubmodularOracle& oracle,
                  std::span<const Element> ground_in) {
  const std::vector<Element> ground = CheckedGround(oracle, ground_in);
  const CardinalityConstraint constraint(config.k);
  const RandomTape tape(config.seed, tree.machines());
  const bool sample_extras =
      AsMedoid(oracle) != nullptr && config.kmedoid_extra > 0;

  RunReport report;
  report.algorithm = algorithm;
  report.config = config;
  report.branching = tree.branching();
  report.levels = tree.levels();

  const auto solve_start = Clock::now();
  const auto parts = Partition(ground, tape);
  std::vector<Solution> current(tree.machines());

  {
    const auto level_start = Clock::now();
    std::vector<NodeOutcome> leaves(tree.machines());
    ForEachNode(config.mode, leaves.size(), [&](std::size_t i) {
      leaves[i] = RunLeaf(static_cast<MachineId>(i), parts[i], oracle, constraint);
    });
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      report.nodes.push_back(leaves[i].trace);
      current[i] = std::move(leaves[i].solution);
    }
    report.level_seconds.push_back(SecondsSince(level_start));
  }

  for (int level = 1; level <= tree.levels(); ++level) {
    const auto level_start = Clock::now();
    const std::vector<MachineId> ids = tree.NodesAt(level);
    const bool against_all =
        algorithm == Algorithm::kRandGreedi && level == tree.levels();
    std::vector<NodeOutcome> outcomes(ids.size());
    ForEachNode(config.mode, ids.size(), [&](std::size_t j) {
      const NodeLabel node{level, ids[j]};
      std::vector<Solution> received;
      for (MachineId child : tree.Children(node.id, level)) {
        received.push_back(current[child]);
      }
      std::vector<Element> extras;
      if (sample_extras) {
        extras = SampleWithoutReplacement(oracle.size(), config.kmedoid_extra,
                                          NodeSeed(config.seed, node));
      }
      outcomes[j] = Aggregate(node, received, 0, oracle, constraint, extras,
                              against_all);
    });
    for (std::size_t j = 0; j < ids.size(); ++j) {
      report.nodes.push_back(outcomes[j].trace);
      current[ids[j]] = std::move(outcomes[j].solution);
    }
    report.level_seconds.push_back(SecondsSince(level_start));
  }

  report.solution = std::move(current[0]);
  report.global_value = AsMedoid(oracle) != nullptr
                            ? oracle.Value(report.solution.members)
                            : report.solution.value;
  report.solve_seconds = SecondsSince(solve_start);

  for (const NodeTrace& t : report.nodes) {
    report.total_function_calls += t.function_calls;
    if (t.label.id == 0) report.critical_path_calls += t.function_calls;
    report.total_communication_elements += t.elements_received;
    report.total_communication_payload_units += t.payload_units_received;
  }
  return report;
}

}  // namespace

NodeOutcome AggregateNode(NodeLabel node, std::span<const Solution> children,
                          std::size_t own, const SubmodularOracle& oracle,
                          const CardinalityConstraint& constraint,
                          std::span<const Element> extras) {
  return Aggregate(node, children, own, oracle, constraint, extras,
                   /*against_all_children=*/false);
}

RunReport RunGreedyML(const RunConfig& config, const SubmodularOracle& oracle) {
  const std::vector<Element> all = GroundSet(oracle.size()).Elements();
  return RunGreedyML(config, oracle, all);
}

RunReport RunGreedyML(const RunConfig& config, const SubmodularOracle& oracle,
                      std::span<const Element> ground) {
  const AccumulationTree tree = config.ResolveTree();
  return Execute(Algorithm::kGreedyML, config, tree, oracle, ground);
}

RunReport RunRandGreedi(const RunConfig& config,
                        const SubmodularOracle& oracle) {
  const std::vector<Element> all = GroundSet(oracle.size()).Elements();
  return RunRandGreedi(config, oracle, all);
}

RunReport RunRandGreedi(const RunConfig& config, const SubmodularOracle& oracle,
                        std::span<const Element> ground) {
  RunConfig flat = config;
  flat.branching = std::max<std::size_t>(config.machines, 2);
  flat.levels.reset();
  const AccumulationTree tree = flat.ResolveTree();
  return Execute(Algorithm::kRandGreedi, config, tree, oracle, ground);
}

RunReport RunSequential(const RunConfig& config,
                        const SubmodularOracle& oracle) {
  if (config.k == 0) throw ConfigError("k must be at least 1");
  const std::vector<Element> ground =
      CheckedGround(oracle, GroundSet(oracle.size()).Elements());
  const CardinalityConstraint constraint(config.k);

  RunReport report;
  report.algorithm = Algorithm::kGreedy;
  report.config = config;
  report.branching = 2;
  report.levels = 0;

  const auto start = Clock::now();
  GreedyResult result = LazyGreedy(oracle, constraint, ground);
  report.solution = std::move(result.solution);
  report.global_value = report.solution.value;

  NodeTrace trace;
  trace.label = {0, 0};
  trace.input_elements = ground.size();
  trace.function_calls = result.stats.function_calls;
  trace.solution_size = report.solution.size();
  report.nodes.push_back(trace);
  report.total_function_calls = trace.function_calls;
  report.critical_path_calls = trace.function_calls;
  report.solve_seconds = SecondsSince(start);
  report.level_seconds.push_back(report.solve_seconds);
  return report;
}

RunReport Run(Algorithm algorithm, const RunConfig& config,
              const SubmodularOracle& oracle) {
  switch (algorithm) {
    case Algorithm::kGreedy:
      return RunSequential(config, oracle);
    case Algorithm::kRandGreedi:
      return RunRandGreedi(config, oracle);
    case Algorithm::kGreedyML:
      return RunGreedyML(config, oracle);
  }
  throw ConfigError("unknown algorithm");
}

}  // namespace greedyml

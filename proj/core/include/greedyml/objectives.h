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

// Concrete objectives: maximum k-cover, k-dominating set, and the k-medoid
// exemplar-clustering objective.

#ifndef GREEDYML_OBJECTIVES_H_
#define GREEDYML_OBJECTIVES_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "greedyml/oracle.h"
#include "greedyml/types.h"

namespace greedyml {

// One subset of a base universe per ground-set element.
struct SetFamily {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::uint32_t>> subsets;

  // Throws std::invalid_argument if an item is >= universe_size.
  void Validate() const;
};

// Undirected simple graph. Neighbor lists are sorted and duplicate-free, with
// no self-loops.
struct Graph {
  std::vector<std::vector<Element>> adjacency;

  std::size_t num_vertices() const { return adjacency.size(); }
  std::size_t num_edges() const;

  // Builds a graph from an edge list over vertices 0..n-1. Self-loops are
  // dropped and parallel edges collapsed.
  static Graph FromEdges(std::size_t n,
                         std::span<const std::pair<Element, Element>> edges);
};

// Row-major matrix of `size()` points with `dim` features each, and the
// auxiliary exemplar e0.
struct PointSet {
  std::size_t dim = 0;
  std::vector<double> data;
  std::vector<double> e0;

  std::size_t size() const { return dim == 0 ? 0 : data.size() / dim; }
  std::span<const double> row(std::size_t i) const {
    return {data.data() + i * dim, dim};
  }
  // Throws std::invalid_argument on ragged data or a wrong-length e0.
  void Validate() const;
};

// Mean-subtracts then L2-normalizes each row in place. Returns the number of
// rows that were constant and became zero vectors.
std::size_t NormalizeRows(PointSet& points);

double EuclideanDistance(std::span<const double> a, std::span<const double> b);

// f(S) = |union of subsets in S|.
class KCoverOracle final : public SubmodularOracle {
 public:
  explicit KCoverOracle(std::shared_ptr<const SetFamily> family);

  std::size_t size() const override { return family_->subsets.size(); }
  bool integral() const override { return true; }
  std::size_t PayloadSize(Element e) const override {
    return family_->subsets[e].size();
  }
  std::unique_ptr<GainState> NewState() const override;

  const SetFamily& family() const { return *family_; }

 private:
  std::shared_ptr<const SetFamily> family_;
};

enum class Neighborhood { kOpen, kClosed };

// f(S) = |union of N(u) for u in S|. With kOpen, N(u) excludes u itself.
class KDominatingSetOracle final : public SubmodularOracle {
 public:
  explicit KDominatingSetOracle(std::shared_ptr<const Graph> graph,
                                Neighborhood neighborhood = Neighborhood::kOpen);

  std::size_t size() const override { return graph_->num_vertices(); }
  bool integral() const override { return true; }
  std::size_t PayloadSize(Element e) const override {
    return graph_->adjacency[e].size();
  }
  std::unique_ptr<GainState> NewState() const override;

  const Graph& graph() const { return *graph_; }
  Neighborhood neighborhood() const { return neighborhood_; }

 private:
  std::shared_ptr<const Graph> graph_;
  Neighborhood neighborhood_;
};

// Exemplar clustering. With loss
//   L(S) = (1/|G|) * sum_{u in G} min_{v in S} d(u, v)
// over an evaluation set G, the objective is f(S) = L({e0}) - L(S + {e0}).
// Candidates are global point indices; G is either every point or, for a
// localized oracle, a subset of them.
class KMedoidOracle final : public SubmodularOracle {
 public:
  // Evaluates over every point.
  explicit KMedoidOracle(std::shared_ptr<const PointSet> points);

  std::size_t size() const override { return points_->size(); }
  bool integral() const override { return false; }
  std::size_t PayloadSize(Element) const override { return points_->dim; }
  std::unique_ptr<GainState> NewState() const override;

  // Loss of S (e0 is not added implicitly). Throws std::domain_error for an
  // empty S.
  double Loss(std::span<const Element> set) const;
  // Loss of S + {e0}.
  double LossWithReference(std::span<const Element> set) const;

  // Evaluation set, ascending global indices.
  std::span<const Element> evaluation_points() const { return eval_; }
  const PointSet& points() const { return *points_; }

  // Oracle whose loss averages only over subset + extra. Throws
  // std::domain_error if that union is empty or out of range.
  KMedoidOracle Localize(std::span<const Element> subset,
                         std::span<const Element> extra) const;

 private:
  KMedoidOracle(std::shared_ptr<const PointSet> points,
                std::vector<Element> eval);

  friend class KMedoidState;

  std::shared_ptr<const PointSet> points_;
  std::vector<Element> eval_;
  // d(u, e0) for each u in eval_.
  std::vector<double> reference_distance_;
};

// `count` distinct points drawn uniformly without replacement from 0..n-1,
// reproducible from `seed`. Returned ascending. count is clamped to n.
std::vector<Element> SampleWithoutReplacement(std::size_t n, std::size_t count,
                                              std::uint64_t seed);

}  // namespace greedyml

#endif  // GREEDYML_OBJECTIVES_H_

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

#include "greedyml/objectives.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "greedyml/random_tape.h"

namespace greedyml {

void SetFamily::Validate() const {
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::uint32_t item : subsets[i]) {
      if (item >= universe_size) {
        throw std::invalid_argument("subset " + std::to_string(i) +
                                    " has item " + std::to_string(item) +
                                    " outside universe of size " +
                                    std::to_string(universe_size));
      }
    }
  }
}

std::size_t Graph::num_edges() const {
  std::size_t degree_sum = 0;
  for (const auto& nbrs : adjacency) degree_sum += nbrs.size();
  return degree_sum / 2;
}

Graph Graph::FromEdges(std::size_t n,
                       std::span<const std::pair<Element, Element>> edges) {
  Graph g;
  g.adjacency.resize(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint outside vertex range");
    }
    if (u == v) continue;
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

void PointSet::Validate() const {
  if (dim == 0) {
    if (!data.empty()) throw std::invalid_argument("points with zero dimension");
    return;
  }
  if (data.size() % dim != 0) {
    throw std::invalid_argument("point data is not a whole number of rows");
  }
  if (e0.size() != dim) {
    throw std::invalid_argument("reference vector e0 has length " +
                                std::to_string(e0.size()) + ", expected " +
                                std::to_string(dim));
  }
}

std::size_t NormalizeRows(PointSet& points) {
  std::size_t degenerate = 0;
  const std::size_t dim = points.dim;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double* row = points.data.data() + i * dim;
    const double mean = std::accumulate(row, row + dim, 0.0) / dim;
    double norm2 = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      row[j] -= mean;
      norm2 += row[j] * row[j];
    }
    const double norm = std::sqrt(norm2);
    // A constant row leaves only rounding noise after centering.
    if (norm <= 1e-12 * (std::abs(mean) + 1.0)) {
      std::fill(row, row + dim, 0.0);
      ++degenerate;
      continue;
    }
    for (std::size_t j = 0; j < dim; ++j) row[j] /= norm;
  }
  points.e0.assign(dim, 0.0);
  return degenerate;
}

double EuclideanDistance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

// ---------------------------------------------------------------------------
// k-cover

namespace {

class CoverageState final : public GainState {
 public:
  CoverageState(const SetFamily& family)
      : family_(family), covered_(family.universe_size, 0) {}

  double Gain(Element e) const override {
    std::size_t fresh = 0;
    for (std::uint32_t item : family_.subsets[e]) fresh += covered_[item] == 0;
    return static_cast<double>(fresh);
  }

  void Add(Element e) override {
    for (std::uint32_t item : family_.subsets[e]) {
      if (covered_[item] == 0) {
        covered_[item] = 1;
        ++count_;
      }
    }
  }

  double Value() const override { return static_cast<double>(count_); }

 private:
  const SetFamily& family_;
  std::vector<std::uint8_t> covered_;
  std::size_t count_ = 0;
};

}  // namespace

KCoverOracle::KCoverOracle(std::shared_ptr<const SetFamily> family)
    : family_(std::move(family)) {
  family_->Validate();
}

std::unique_ptr<GainState> KCoverOracle::NewState() const {
  return std::make_unique<CoverageState>(*family_);
}

// ---------------------------------------------------------------------------
// k-dominating set

namespace {

class DominationState final : public GainState {
 public:
  DominationState(const Graph& graph, bool closed)
      : graph_(graph), closed_(closed), covered_(graph.num_vertices(), 0) {}

  double Gain(Element u) const override {
    std::size_t fresh = closed_ && covered_[u] == 0 ? 1 : 0;
    for (Element v : graph_.adjacency[u]) fresh += covered_[v] == 0;
    return static_cast<double>(fresh);
  }

  void Add(Element u) override {
    if (closed_) Mark(u);
    for (Element v : graph_.adjacency[u]) Mark(v);
  }

  double Value() const override { return static_cast<double>(count_); }

 private:
  void Mark(Element v) {
    if (covered_[v] == 0) {
      covered_[v] = 1;
      ++count_;
    }
  }

  const Graph& graph_;
  bool closed_;
  std::vector<std::uint8_t> covered_;
  std::size_t count_ = 0;
};

}  // namespace

KDominatingSetOracle::KDominatingSetOracle(std::shared_ptr<const Graph> graph,
                                           Neighborhood neighborhood)
    : graph_(std::move(graph)), neighborhood_(neighborhood) {}

std::unique_ptr<GainState> KDominatingSetOracle::NewState() const {
  return std::make_unique<DominationState>(
      *graph_, neighborhood_ == Neighborhood::kClosed);
}

// ---------------------------------------------------------------------------
// k-medoid

class KMedoidState final : public GainState {
 public:
  explicit KMedoidState(const KMedoidOracle& oracle)
      : oracle_(oracle), nearest_(oracle.reference_distance_) {}

  double Gain(Element e) const override {
    const PointSet& pts = *oracle_.points_;
    const auto candidate = pts.row(e);
    double sum = 0.0;
    for (std::size_t i = 0; i < oracle_.eval_.size(); ++i) {
      const double d = EuclideanDistance(pts.row(oracle_.eval_[i]), candidate);
      if (d < nearest_[i]) sum += nearest_[i] - d;
    }
    return sum / static_cast<double>(oracle_.eval_.size());
  }

  void Add(Element e) override {
    const PointSet& pts = *oracle_.points_;
    const auto candidate = pts.row(e);
    for (std::size_t i = 0; i < oracle_.eval_.size(); ++i) {
      nearest_[i] = std::min(
          nearest_[i], EuclideanDistance(pts.row(oracle_.eval_[i]), candidate));
    }
  }

  // Recomputed from the nearest-distance table so that the value does not
  // depend on insertion order.
  double Value() const override {
    double sum = 0.0;
    for (std::size_t i = 0; i < nearest_.size(); ++i) {
      sum += oracle_.reference_distance_[i] - nearest_[i];
    }
    return sum / static_cast<double>(nearest_.size());
  }

 private:
  const KMedoidOracle& oracle_;
  std::vector<double> nearest_;
};

KMedoidOracle::KMedoidOracle(std::shared_ptr<const PointSet> points)
    : points_(std::move(points)) {
  points_->Validate();
  eval_.resize(points_->size());
  std::iota(eval_.begin(), eval_.end(), Element{0});
  if (eval_.empty()) throw std::domain_error("k-medoid over an empty point set");
  reference_distance_.reserve(eval_.size());
  for (Element u : eval_) {
    reference_distance_.push_back(EuclideanDistance(points_->row(u), points_->e0));
  }
}

KMedoidOracle::KMedoidOracle(std::shared_ptr<const PointSet> points,
                             std::vector<Element> eval)
    : points_(std::move(points)), eval_(std::move(eval)) {
  reference_distance_.reserve(eval_.size());
  for (Element u : eval_) {
    reference_distance_.push_back(EuclideanDistance(points_->row(u), points_->e0));
  }
}

std::unique_ptr<GainState> KMedoidOracle::NewState() const {
  return std::make_unique<KMedoidState>(*this);
}

double KMedoidOracle::Loss(std::span<const Element> set) const {
  if (set.empty()) {
    throw std::domain_error("k-medoid loss of an empty exemplar set");
  }
  double sum = 0.0;
  for (Element u : eval_) {
    double nearest = EuclideanDistance(points_->row(u), points_->row(set[0]));
    for (std::size_t j = 1; j < set.size(); ++j) {
      nearest = std::min(nearest,
                         EuclideanDistance(points_->row(u), points_->row(set[j])));
    }
    sum += nearest;
  }
  return sum / static_cast<double>(eval_.size());
}

double KMedoidOracle::LossWithReference(std::span<const Element> set) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < eval_.size(); ++i) {
    double nearest = reference_distance_[i];
    for (Element v : set) {
      nearest = std::min(nearest,
                         EuclideanDistance(points_->row(eval_[i]), points_->row(v)));
    }
    sum += nearest;
  }
  return sum / static_cast<double>(eval_.size());
}

KMedoidOracle KMedoidOracle::Localize(std::span<const Element> subset,
                                      std::span<const Element> extra) const {
  std::vector<Element> local(subset.begin(), subset.end());
  local.insert(local.end(), extra.begin(), extra.end());
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());
  if (local.empty()) {
    throw std::domain_error("localized k-medoid needs a nonempty ground set");
  }
  if (local.back() >= size()) {
    throw std::domain_error("localized point " + std::to_string(local.back()) +
                            " outside point set");
  }
  return KMedoidOracle(points_, std::move(local));
}

std::vector<Element> SampleWithoutReplacement(std::size_t n, std::size_t count,
                                              std::uint64_t seed) {
  count = std::min(count, n);
  std::vector<Element> pool(n);
  std::iota(pool.begin(), pool.end(), Element{0});
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace greedyml

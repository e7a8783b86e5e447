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

// Text loaders. Every loader remaps external ids to dense indices in order of
// first appearance and keeps the original ids in the returned GroundSet.
//
//   edges  "u v" per line, non-negative integers; '#' or '%' starts a comment
//          line. Undirected; self-loops and repeated edges are dropped.
//   fimi   one transaction per line, space separated item ids. Each line is
//          one ground-set element; blank lines are skipped.
//   csv    one point per line, comma separated reals, constant width.
//
// Fields may be separated by spaces or tabs; lines end in "\n" or "\r\n".

#ifndef GREEDYML_INGEST_H_
#define GREEDYML_INGEST_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "greedyml/objectives.h"
#include "greedyml/types.h"

namespace greedyml {

enum class Format { kEdges, kFimi, kCsv };

std::string ToString(Format format);

struct ParseStats {
  std::size_t lines = 0;
  // Blank and comment lines.
  std::size_t skipped = 0;
  // Distinct external ids that were given dense indices.
  std::size_t remapped_ids = 0;
  std::size_t self_loops = 0;
  std::size_t duplicate_entries = 0;
  // csv rows that were constant and became zero vectors.
  std::size_t degenerate_rows = 0;

  friend bool operator==(const ParseStats&, const ParseStats&) = default;
};

struct DatasetDescriptor {
  Format format = Format::kEdges;
  std::string path;
  ParseStats stats;
};

struct GraphData {
  Graph graph;
  // label(v) is the vertex id used in the file.
  GroundSet ground;
  ParseStats stats;
};

struct SetFamilyData {
  SetFamily family;
  // label(e) is the 0-based index of the transaction among data lines.
  GroundSet ground;
  // item_labels[i] is the file id of dense item i.
  std::vector<std::uint64_t> item_labels;
  ParseStats stats;
};

struct PointData {
  PointSet points;
  // label(e) is the 0-based index of the row among data lines.
  GroundSet ground;
  ParseStats stats;
};

// All parsers throw ParseError carrying the 1-based line number.
GraphData ParseEdgeList(std::istream& in);
SetFamilyData ParseFimi(std::istream& in);
PointData ParseDenseCsv(std::istream& in, bool preprocess);

}  // namespace greedyml

#endif  // GREEDYML_INGEST_H_

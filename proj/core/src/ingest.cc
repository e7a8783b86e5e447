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

#include "greedyml/ingest.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "greedyml/errors.h"

namespace greedyml {

std::string ToString(Format format) {
  switch (format) {
    case Format::kEdges:
      return "edges";
    case Format::kFimi:
      return "fimi";
    case Format::kCsv:
      return "csv";
  }
  return "unknown";
}

namespace {

bool IsBlank(char c) { return c == ' ' || c == '\t'; }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsBlank(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsBlank(s.back())) s.remove_suffix(1);
  return s;
}

// Reads one line, dropping a trailing '\r'.
bool NextLine(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::vector<std::string_view> SplitBlanks(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsBlank(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !IsBlank(s[i])) ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t ParseId(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError("malformed id '" + std::string(token) + "'", line);
  }
  return value;
}

double ParseReal(std::string_view token, std::size_t line) {
  token = Trim(token);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      end != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError("malformed number '" + std::string(token) + "'", line);
  }
  return value;
}

// Dense remapping in first-appearance order.
class IdMap {
 public:
  std::uint32_t Intern(std::uint64_t external) {
    auto [it, inserted] =
        index_.emplace(external, static_cast<std::uint32_t>(labels_.size()));
    if (inserted) labels_.push_back(external);
    return it->second;
  }
  std::vector<std::uint64_t> TakeLabels() { return std::move(labels_); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint64_t> labels_;
};

}  // namespace

GraphData ParseEdgeList(std::istream& in) {
  GraphData out;
  IdMap ids;
  std::vector<std::pair<Element, Element>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (NextLine(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#' || text.front() == '%') {
      ++out.stats.skipped;
      continue;
    }
    const auto tokens = SplitBlanks(text);
    if (tokens.size() != 2) {
      throw ParseError("expected two vertex ids, found " +
                           std::to_string(tokens.size()) + " fields",
                       line_no);
    }
    const std::uint64_t u_ext = ParseId(tokens[0], line_no);
    const std::uint64_t v_ext = ParseId(tokens[1], line_no);
    const Element u = ids.Intern(u_ext);
    const Element v = ids.Intern(v_ext);
    if (u == v) {
      ++out.stats.self_loops;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  out.stats.lines = line_no;

  const std::size_t before = edges.size();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.stats.duplicate_entries = before - edges.size();

  out.stats.remapped_ids = ids.size();
  out.graph = Graph::FromEdges(ids.size(), edges);
  out.ground = GroundSet(ids.TakeLabels());
  return out;
}

SetFamilyData ParseFimi(std::istream& in) {
  SetFamilyData out;
  IdMap items;
  std::vector<std::uint64_t> transaction_labels;
  std::string line;
  std::size_t line_no = 0;
  while (NextLine(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty()) {
      ++out.stats.skipped;
      continue;
    }
    std::vector<std::uint32_t> subset;
    for (std::string_view token : SplitBlanks(text)) {
      subset.push_back(items.Intern(ParseId(token, line_no)));
    }
    std::sort(subset.begin(), subset.end());
    const std::size_t before = subset.size();
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    out.stats.duplicate_entries += before - subset.size();
    transaction_labels.push_back(out.family.subsets.size());
    out.family.subsets.push_back(std::move(subset));
  }
  out.stats.lines = line_no;
  out.stats.remapped_ids = items.size();
  out.family.universe_size = items.size();
  out.item_labels = items.TakeLabels();
  out.ground = GroundSet(std::move(transaction_labels));
  return out;
}

PointData ParseDenseCsv(std::istream& in, bool preprocess) {
  PointData out;
  std::vector<std::uint64_t> row_labels;
  std::string line;
  std::size_t line_no = 0;
  while (NextLine(in, line)) {
    ++line_no;
    std::string_view text = Trim(line);
    if (text.empty()) {
      ++out.stats.skipped;
      continue;
    }
    std::size_t width = 0;
    while (true) {
      const std::size_t comma = text.find(',');
      out.points.data.push_back(ParseReal(text.substr(0, comma), line_no));
      ++width;
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    if (row_labels.empty()) {
      out.points.dim = width;
    } else if (width != out.points.dim) {
      throw ParseError("row has " + std::to_string(width) +
                           " fields, expected " +
                           std::to_string(out.points.dim),
                       line_no);
    }
    row_labels.push_back(row_labels.size());
  }
  out.stats.lines = line_no;
  out.stats.remapped_ids = row_labels.size();
  out.points.e0.assign(out.points.dim, 0.0);
  if (preprocess) out.stats.degenerate_rows = NormalizeRows(out.points);
  out.ground = GroundSet(std::move(row_labels));
  return out;
}

}  // namespace greedyml

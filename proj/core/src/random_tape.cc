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

#include "greedyml/random_tape.h"

#include <algorithm>

#include "greedyml/errors.h"

namespace greedyml {

RandomTape::RandomTape(std::uint64_t seed, std::size_t machines)
    : seed_(seed), machines_(machines) {
  if (machines == 0) throw ConfigError("machine count must be at least 1");
}

std::vector<std::vector<Element>> Partition(std::span<const Element> elements,
                                            const RandomTape& tape) {
  std::vector<std::vector<Element>> parts(tape.machines());
  for (Element e : elements) parts[tape.Assign(e)].push_back(e);
  for (auto& part : parts) {
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
  }
  return parts;
}

std::vector<std::vector<Element>> Partition(const GroundSet& ground,
                                            const RandomTape& tape) {
  // Ascending enumeration already yields sorted parts.
  std::vector<std::vector<Element>> parts(tape.machines());
  for (Element e = 0; e < ground.size(); ++e) parts[tape.Assign(e)].push_back(e);
  return parts;
}

}  // namespace greedyml

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

#ifndef GREEDYML_RANDOM_TAPE_H_
#define GREEDYML_RANDOM_TAPE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "greedyml/types.h"

namespace greedyml {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// SplitMix64 output finalizer.
constexpr std::uint64_t SplitMix64Mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Vigna's SplitMix64 generator.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t operator()() {
    state_ += kGoldenGamma;
    return SplitMix64Mix(state_);
  }

 private:
  std::uint64_t state_;
};

// Seeded element -> machine assignment. All of the distributed algorithms'
// randomness lives here: machine(e) = SplitMix64(seed ^ e * gamma) mod m,
// where SplitMix64(x) is the first output of the generator started at x.
class RandomTape {
 public:
  // Throws ConfigError when m == 0.
  RandomTape(std::uint64_t seed, std::size_t machines);

  std::uint64_t seed() const { return seed_; }
  std::size_t machines() const { return machines_; }

  MachineId Assign(Element e) const {
    const std::uint64_t start = seed_ ^ (std::uint64_t{e} * kGoldenGamma);
    return static_cast<MachineId>(SplitMix64(start)() % machines_);
  }

 private:
  std::uint64_t seed_;
  std::size_t machines_;
};

// Splits `elements` into tape.machines() ascending lists; element e lands in
// list tape.Assign(e). Parts may be empty.
std::vector<std::vector<Element>> Partition(std::span<const Element> elements,
                                            const RandomTape& tape);
std::vector<std::vector<Element>> Partition(const GroundSet& ground,
                                            const RandomTape& tape);

}  // namespace greedyml

#endif  // GREEDYML_RANDOM_TAPE_H_

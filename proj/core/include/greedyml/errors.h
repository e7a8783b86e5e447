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

#ifndef GREEDYML_ERRORS_H_
#define GREEDYML_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greedyml {

// Invalid run parameters (k, m, b, L, objective/format mismatch).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file. `line()` is 1-based; 0 means "not line specific".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A solver produced or received a solution that violates its contract.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The exhaustive oracle refuses instances above its enumeration budget.
class GuardRailError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace greedyml

#endif  // GREEDYML_ERRORS_H_

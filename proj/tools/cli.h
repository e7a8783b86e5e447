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

#ifndef GREEDYML_TOOLS_CLI_H_
#define GREEDYML_TOOLS_CLI_H_

#include <ostream>

namespace greedyml::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kParseError = 3,
  kIntegrityError = 4,
};

// Entry point of the `greedyml` tool. The report goes to --report or, by
// default, to `out`; diagnostics go to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace greedyml::cli

#endif  // GREEDYML_TOOLS_CLI_H_

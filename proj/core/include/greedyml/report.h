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

#ifndef GREEDYML_REPORT_H_
#define GREEDYML_REPORT_H_

#include <string>

#include "greedyml/engine.h"
#include "greedyml/types.h"

namespace greedyml {

struct ReportOptions {
  // Seconds spent reading the input; excluded from solve time.
  double ingest_seconds = 0.0;
  // Zeroes every timing field, which makes reports of identical runs
  // byte-identical.
  bool omit_timings = false;
};

// Serializes a run as the JSON report document (schema/report.schema.json).
// `ground` translates members back to the ids used in the input file.
std::string ReportToJson(const RunReport& report, const GroundSet& ground,
                         const ReportOptions& options = {});

}  // namespace greedyml

#endif  // GREEDYML_REPORT_H_

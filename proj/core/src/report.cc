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

#include "greedyml/report.h"

#include <cstdint>

#include "json.hpp"

namespace greedyml {

std::string ReportToJson(const RunReport& report, const GroundSet& ground,
                         const ReportOptions& options) {
  using Json = nlohmann::ordered_json;
  const RunConfig& cfg = report.config;
  const bool sequential = report.algorithm == Algorithm::kGreedy;

  Json config = {
      {"algorithm", ToString(report.algorithm)},
      {"objective", ToString(cfg.objective)},
      {"k", cfg.k},
      {"m", sequential ? std::size_t{1} : cfg.machines},
      {"b", report.branching},
      {"L", report.levels},
      {"seed", cfg.seed},
      {"mode", ToString(cfg.mode)},
      {"kmedoid_extra", cfg.kmedoid_extra},
  };

  Json members = Json::array();
  Json members_internal = Json::array();
  for (Element e : report.solution.members) {
    members.push_back(ground.label(e));
    members_internal.push_back(e);
  }
  Json result = Json::object();
  if (cfg.objective == Objective::kMedoid) {
    result["value"] = report.solution.value;
    result["global_value"] = report.global_value;
  } else {
    // Coverage counts are exact integers.
    result["value"] = static_cast<std::int64_t>(report.solution.value);
  }
  result["members"] = std::move(members);
  result["members_internal"] = std::move(members_internal);

  Json per_node = Json::array();
  for (const NodeTrace& t : report.nodes) {
    per_node.push_back({
        {"level", t.label.level},
        {"id", t.label.id},
        {"function_calls", t.function_calls},
        {"input_elements", t.input_elements},
        {"elements_received", t.elements_received},
        {"payload_units_received", t.payload_units_received},
        {"solution_size", t.solution_size},
    });
  }
  Json metrics = {
      {"total_function_calls", report.total_function_calls},
      {"critical_path_calls", report.critical_path_calls},
      {"total_communication_elements", report.total_communication_elements},
      {"total_communication_payload_units",
       report.total_communication_payload_units},
      {"per_node", std::move(per_node)},
  };

  Json per_level = Json::array();
  for (double s : report.level_seconds) {
    per_level.push_back(options.omit_timings ? 0.0 : s);
  }
  Json timings = {
      {"ingest_s", options.omit_timings ? 0.0 : options.ingest_seconds},
      {"solve_s", options.omit_timings ? 0.0 : report.solve_seconds},
      {"per_level_s", std::move(per_level)},
  };

  Json doc = {
      {"config", std::move(config)},
      {"result", std::move(result)},
      {"metrics", std::move(metrics)},
      {"timings", std::move(timings)},
  };
  return doc.dump(2) + "\n";
}

}  // namespace greedyml

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

#include "cli.h"

#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greedyml/engine.h"
#include "greedyml/errors.h"
#include "greedyml/ingest.h"
#include "greedyml/objectives.h"
#include "greedyml/report.h"

namespace greedyml::cli {
namespace {

struct Options {
  Objective objective = Objective::kCover;
  std::string input;
  std::optional<Format> format;
  std::size_t k = 0;
  std::size_t machines = 1;
  std::optional<long long> branching;
  std::optional<int> levels;
  std::uint64_t seed = 0;
  ExecutionMode mode = ExecutionMode::kSimulate;
  Algorithm algorithm = Algorithm::kGreedyML;
  std::size_t kmedoid_extra = 0;
  std::string report_path;
  bool no_preprocess = false;
  bool closed_neighborhood = false;
};

Format FormatFor(Objective objective) {
  switch (objective) {
    case Objective::kCover:
      return Format::kFimi;
    case Objective::kDominatingSet:
      return Format::kEdges;
    case Objective::kMedoid:
      return Format::kCsv;
  }
  return Format::kEdges;
}

struct LoadedInstance {
  std::shared_ptr<const SubmodularOracle> oracle;
  GroundSet ground;
};

LoadedInstance Load(const Options& opt) {
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) throw ParseError("cannot open input '" + opt.input + "'", 0);
  LoadedInstance loaded;
  switch (opt.objective) {
    case Objective::kCover: {
      SetFamilyData data = ParseFimi(in);
      loaded.ground = std::move(data.ground);
      loaded.oracle = std::make_shared<KCoverOracle>(
          std::make_shared<const SetFamily>(std::move(data.family)));
      break;
    }
    case Objective::kDominatingSet: {
      GraphData data = ParseEdgeList(in);
      loaded.ground = std::move(data.ground);
      loaded.oracle = std::make_shared<KDominatingSetOracle>(
          std::make_shared<const Graph>(std::move(data.graph)),
          opt.closed_neighborhood ? Neighborhood::kClosed : Neighborhood::kOpen);
      break;
    }
    case Objective::kMedoid: {
      PointData data = ParseDenseCsv(in, !opt.no_preprocess);
      if (data.points.size() == 0) throw ParseError("no points in input", 0);
      loaded.ground = std::move(data.ground);
      loaded.oracle = std::make_shared<KMedoidOracle>(
          std::make_shared<const PointSet>(std::move(data.points)));
      break;
    }
  }
  if (loaded.oracle->size() == 0) throw ParseError("input has no elements", 0);
  return loaded;
}

RunConfig ToConfig(const Options& opt) {
  RunConfig cfg;
  cfg.objective = opt.objective;
  cfg.k = opt.k;
  cfg.machines = opt.machines;
  cfg.seed = opt.seed;
  cfg.mode = opt.mode;
  cfg.kmedoid_extra = opt.kmedoid_extra;
  if (opt.branching.has_value()) {
    if (*opt.branching < 2) throw ConfigError("--branching must be at least 2");
    cfg.branching = static_cast<std::size_t>(*opt.branching);
  }
  if (opt.levels.has_value()) {
    if (*opt.levels < 0) throw ConfigError("--levels must be non-negative");
    cfg.levels = *opt.levels;
  }
  if (cfg.k == 0) throw ConfigError("--k must be at least 1");
  if (cfg.machines == 0) throw ConfigError("--machines must be at least 1");
  if (opt.algorithm == Algorithm::kGreedyML) {
    cfg.ResolveTree();
  }
  return cfg;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  Options opt;
  CLI::App app{"Monotone submodular maximization under a cardinality "
               "constraint: sequential greedy, RandGreedi and multilevel "
               "GreedyML on a simulated cluster.",
               "greedyml"};

  const std::map<std::string, Objective> objectives = {
      {"kcover", Objective::kCover},
      {"kdom", Objective::kDominatingSet},
      {"kmedoid", Objective::kMedoid}};
  const std::map<std::string, Format> formats = {
      {"edges", Format::kEdges}, {"fimi", Format::kFimi}, {"csv", Format::kCsv}};
  const std::map<std::string, ExecutionMode> modes = {
      {"simulate", ExecutionMode::kSimulate},
      {"concurrent", ExecutionMode::kConcurrent}};
  const std::map<std::string, Algorithm> algorithms = {
      {"greedy", Algorithm::kGreedy},
      {"randgreedi", Algorithm::kRandGreedi},
      {"greedyml", Algorithm::kGreedyML}};

  app.add_option("--objective", opt.objective, "kcover | kdom | kmedoid")
      ->required()
      ->transform(CLI::CheckedTransformer(objectives, CLI::ignore_case));
  app.add_option("--input", opt.input, "Dataset path")->required();
  app.add_option("--format", opt.format,
                 "edges | fimi | csv (default follows the objective)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--k", opt.k, "Solution size bound")->required();
  app.add_option("--machines", opt.machines, "Number of leaves m")
      ->capture_default_str();
  auto* branching =
      app.add_option("--branching", opt.branching, "Branching factor b");
  auto* levels = app.add_option("--levels", opt.levels,
                                "Accumulation levels L (b is derived)");
  branching->excludes(levels);
  levels->excludes(branching);
  app.add_option("--seed", opt.seed, "Random tape seed")->capture_default_str();
  app.add_option("--mode", opt.mode, "simulate | concurrent")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  app.add_option("--algorithm", opt.algorithm, "greedy | randgreedi | greedyml")
      ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case));
  app.add_option("--kmedoid-extra", opt.kmedoid_extra,
                 "Points sampled into every interior node (k-medoid)")
      ->capture_default_str();
  app.add_option("--report", opt.report_path, "Report path (default stdout)");
  app.add_flag("--no-preprocess", opt.no_preprocess,
               "Use csv rows as given instead of centering and normalizing");
  app.add_flag("--closed-neighborhood", opt.closed_neighborhood,
               "k-dominating set: a vertex also dominates itself");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "greedyml: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (opt.format.has_value() && *opt.format != FormatFor(opt.objective)) {
      throw ConfigError("objective " + ToString(opt.objective) +
                        " reads the " + ToString(FormatFor(opt.objective)) +
                        " format, not " + ToString(*opt.format));
    }
    if (opt.no_preprocess && opt.objective != Objective::kMedoid) {
      throw ConfigError("--no-preprocess applies to csv input only");
    }
    const RunConfig cfg = ToConfig(opt);

    const auto ingest_start = std::chrono::steady_clock::now();
    const LoadedInstance instance = Load(opt);
    const double ingest_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      ingest_start)
            .count();

    const RunReport report = Run(opt.algorithm, cfg, *instance.oracle);
    const std::string json =
        ReportToJson(report, instance.ground, {.ingest_seconds = ingest_seconds});

    if (opt.report_path.empty()) {
      out << json;
    } else {
      std::ofstream file(opt.report_path, std::ios::binary);
      if (!file || !(file << json)) {
        err << "greedyml: cannot write report '" << opt.report_path << "'\n";
        return kConfigError;
      }
    }
    return kOk;
  } catch (const ConfigError& e) {
    err << "greedyml: configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ParseError& e) {
    err << "greedyml: parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const GuardRailError& e) {
    err << "greedyml: " << e.what() << "\n";
    return kIntegrityError;
  } catch (const IntegrityError& e) {
    err << "greedyml: integrity error: " << e.what() << "\n";
    return kIntegrityError;
  } catch (const std::exception& e) {
    err << "greedyml: " << e.what() << "\n";
    return kIntegrityError;
  }
}

}  // namespace greedyml::cli

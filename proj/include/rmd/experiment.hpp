#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rmd/path_lift.hpp"
#include "rmd/planner.hpp"
#include "rmd/scenario.hpp"

namespace rmd {

struct AlgorithmRun {
  PlanResult plan;
  SurfacePath lifted;
  // Riemannian re-measurement of plan.planar_polyline (NaN if not found).
  double surface_length = 0.0;
};

// One seed of one scenario. Every algorithm ran on the same node set.
struct ScenarioRun {
  Scenario scenario;
  std::vector<Point2> nodes;
  std::vector<AlgorithmRun> runs;
  std::optional<std::string> warning;

  bool all_failed() const;
  const AlgorithmRun* find(Algorithm algo) const;
};

struct RunOptions {
  // When set, artifacts go to <out_dir>/<name>_seed<seed>/.
  std::optional<std::filesystem::path> out_dir;
  std::size_t lift_density = default_lift_density;
};

ScenarioRun run_scenario(const Scenario& sc, const RunOptions& opts = {});

// Deterministic record of a run: scenario echo, seed, per-algorithm costs and
// node indices. Wall times are kept out (see timing_json).
nlohmann::json summary_json(const ScenarioRun& run);
nlohmann::json timing_json(const ScenarioRun& run);

// nodes.csv, <algo>_polyline.csv, <algo>_path3d.csv, summary.json, timing.json
void write_run_artifacts(const ScenarioRun& run, const std::filesystem::path& dir);

struct Stats {
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single value
};

Stats describe(const std::vector<double>& values);

struct AlgorithmAggregate {
  Algorithm algorithm;
  std::size_t failures = 0;
  Stats edge_cost;
  Stats surface_length;
};

struct SweepResult {
  std::vector<std::uint64_t> seeds;
  std::vector<ScenarioRun> runs;
  std::vector<AlgorithmAggregate> aggregates;
};

SweepResult run_seed_sweep(const Scenario& sc, const std::vector<std::uint64_t>& seeds, const RunOptions& opts = {});

nlohmann::json aggregate_json(const Scenario& sc, const SweepResult& sweep);

}  // namespace rmd

// rmdijkstra: run roadmap planners over height-surface scenarios.
//
//   rmdijkstra presets
//   rmdijkstra run   --scenario one-peak --algo all --seed 3 --out out
//   rmdijkstra sweep --scenario four-peaks --seeds 20 --out out
//
// Exit codes: 0 success, 1 invalid scenario or arguments, 2 planning failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmd/experiment.hpp"
#include "rmd/scenario.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_planning = 2;

struct Overrides {
  std::string scenario = "one-peak";
  std::string algo = "all";
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> gauss_points;
  std::optional<std::size_t> knn;
  std::string out = "out";
  std::size_t lift_density = rmd::default_lift_density;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--scenario", o.scenario, "Preset name or path to a JSON scenario file")->capture_default_str();
  cmd->add_option("--algo", o.algo, "Comma-separated algorithms or 'all'")->capture_default_str();
  cmd->add_option("--samples", o.samples, "Roadmap node count, including start and goal");
  cmd->add_option("--seed", o.seed, "Sampling seed");
  cmd->add_option("--gauss-points", o.gauss_points, "Gauss-Legendre points per edge");
  cmd->add_option("--knn", o.knn, "Keep only k nearest neighbours per node");
  cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
  cmd->add_option("--lift-density", o.lift_density, "Lifted samples per path segment")->capture_default_str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

rmd::Scenario resolve(const Overrides& o) {
  rmd::Scenario sc = rmd::load_scenario(o.scenario);
  if (o.algo != "all") {
    sc.algorithms.clear();
    for (const auto& name : split(o.algo, ',')) {
      const auto a = rmd::parse_algorithm(name);
      if (!a) throw rmd::ConfigError("algorithms", "unknown algorithm '" + name + "'");
      sc.algorithms.push_back(*a);
    }
  }
  if (o.samples) sc.samples = *o.samples;
  if (o.seed) sc.seed = *o.seed;
  if (o.gauss_points) sc.gauss_points = *o.gauss_points;
  if (o.knn) sc.knn = *o.knn;
  sc.validate();
  return sc;
}

void print_run(const rmd::ScenarioRun& run) {
  std::cout << run.scenario.name << " seed " << run.scenario.seed << " (" << run.nodes.size() << " nodes)\n";
  for (const auto& r : run.runs) {
    std::cout << "  " << rmd::to_string(r.plan.algorithm) << ": ";
    if (!r.plan.found) {
      std::cout << "goal unreachable\n";
      continue;
    }
    std::cout.precision(9);
    std::cout << "edge-cost " << r.plan.total_cost << ", surface length " << r.surface_length << ", "
              << r.plan.node_sequence.size() << " path nodes, " << r.plan.expanded_count << " expanded\n";
  }
  if (run.warning) std::cout << "  warning: " << *run.warning << '\n';
}

std::vector<std::uint64_t> parse_seeds(const std::string& spec, std::uint64_t base) {
  std::vector<std::uint64_t> seeds;
  if (spec.find(',') == std::string::npos) {
    const auto n = std::stoull(spec);
    for (std::uint64_t i = 0; i < n; ++i) seeds.push_back(base + i);
  } else {
    for (const auto& s : split(spec, ',')) seeds.push_back(std::stoull(s));
  }
  if (seeds.empty()) throw rmd::ConfigError("seeds", "need at least one seed");
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest paths on height surfaces under the pullback Riemannian metric"};
  app.require_subcommand(1);

  auto* presets_cmd = app.add_subcommand("presets", "List built-in scenarios");

  Overrides run_opts;
  auto* run_cmd = app.add_subcommand("run", "Run one scenario for one seed");
  add_common(run_cmd, run_opts);

  Overrides sweep_opts;
  std::string seeds_spec = "10";
  auto* sweep_cmd = app.add_subcommand("sweep", "Run one scenario over many seeds");
  add_common(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--seeds", seeds_spec, "Seed count (base..base+N-1) or comma-separated list")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (*presets_cmd) {
      for (const auto& name : rmd::preset_names()) {
        const auto sc = *rmd::preset(name);
        std::cout << name << '\t' << rmd::surface_to_json(sc.field).dump() << "\tsamples=" << sc.samples << '\n';
      }
      return exit_ok;
    }

    if (*run_cmd) {
      const rmd::Scenario sc = resolve(run_opts);
      const auto run = rmd::run_scenario(sc, {run_opts.out, run_opts.lift_density});
      print_run(run);
      return run.all_failed() ? exit_planning : exit_ok;
    }

    const rmd::Scenario sc = resolve(sweep_opts);
    const auto seeds = parse_seeds(seeds_spec, sc.seed);
    const std::filesystem::path out = sweep_opts.out;
    const auto sweep = rmd::run_seed_sweep(sc, seeds, {out, sweep_opts.lift_density});
    for (const auto& run : sweep.runs) print_run(run);

    std::filesystem::create_directories(out);
    std::ofstream(out / (sc.name + "_aggregate.json")) << rmd::aggregate_json(sc, sweep).dump(2) << '\n';
    std::ofstream csv(out / (sc.name + "_aggregate.csv"));
    csv.precision(17);
    csv << "algorithm,failures,cost_mean,cost_min,cost_max,cost_stddev,surface_mean,surface_min,surface_max,"
           "surface_stddev\n";
    std::cout << "aggregate over " << seeds.size() << " seeds:\n";
    bool any_ok = false;
    for (const auto& a : sweep.aggregates) {
      csv << rmd::to_string(a.algorithm) << ',' << a.failures << ',' << a.edge_cost.mean << ',' << a.edge_cost.min
          << ',' << a.edge_cost.max << ',' << a.edge_cost.stddev << ',' << a.surface_length.mean << ','
          << a.surface_length.min << ',' << a.surface_length.max << ',' << a.surface_length.stddev << '\n';
      std::cout << "  " << rmd::to_string(a.algorithm) << ": edge-cost mean " << a.edge_cost.mean << " (sd "
                << a.edge_cost.stddev << "), surface length mean " << a.surface_length.mean << '\n';
      any_ok = any_ok || a.edge_cost.count > 0;
    }
    return any_ok ? exit_ok : exit_planning;
  } catch (const rmd::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_planning;
  }
}

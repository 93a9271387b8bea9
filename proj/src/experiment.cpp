#include "rmd/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace rmd {

using nlohmann::json;

namespace {

bool wants(const Scenario& sc, Algorithm a) {
  return std::find(sc.algorithms.begin(), sc.algorithms.end(), a) != sc.algorithms.end();
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_for_write(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

}  // namespace

bool ScenarioRun::all_failed() const {
  return std::none_of(runs.begin(), runs.end(), [](const AlgorithmRun& r) { return r.plan.found; });
}

const AlgorithmRun* ScenarioRun::find(Algorithm algo) const {
  for (const auto& r : runs)
    if (r.plan.algorithm == algo) return &r;
  return nullptr;
}

ScenarioRun run_scenario(const Scenario& sc, const RunOptions& opts) {
  sc.validate();
  const QuadratureRule& rule = gauss_legendre_cached(sc.gauss_points);

  ScenarioRun run;
  run.scenario = sc;
  run.nodes = sample_points(sc.samples, sc.workspace, sc.seed, sc.start, sc.goal);

  const auto make_roadmap = [&](CostModel model) {
    Roadmap r = build_graph(run.nodes, sc.field, model, rule, sc.seed);
    if (sc.knn) {
      r = prune_knn(r, *sc.knn);
      if (r.warning() && !run.warning) run.warning = *r.warning();
    }
    return r;
  };

  std::optional<Roadmap> riemannian;
  std::optional<Roadmap> chord;
  if (wants(sc, Algorithm::rm_dijkstra)) riemannian = make_roadmap(CostModel::riemannian_length);
  if (wants(sc, Algorithm::euclid_dijkstra) || wants(sc, Algorithm::euclid_astar))
    chord = make_roadmap(CostModel::euclidean_chord_3d);

  for (Algorithm algo : sc.algorithms) {
    AlgorithmRun ar;
    switch (algo) {
      case Algorithm::rm_dijkstra: ar.plan = dijkstra(*riemannian); break;
      case Algorithm::euclid_dijkstra: ar.plan = dijkstra(*chord); break;
      case Algorithm::euclid_astar: ar.plan = astar(*chord, sc.field); break;
    }
    if (ar.plan.found && ar.plan.planar_polyline.size() >= 2) {
      ar.lifted = lift_path(sc.field, ar.plan.planar_polyline, opts.lift_density);
      ar.surface_length = path_surface_length(sc.field, ar.plan.planar_polyline, rule);
    } else {
      ar.surface_length = std::numeric_limits<double>::quiet_NaN();
    }
    run.runs.push_back(std::move(ar));
  }

  if (opts.out_dir) {
    write_run_artifacts(run, *opts.out_dir / (sc.name + "_seed" + std::to_string(sc.seed)));
  }
  return run;
}

json summary_json(const ScenarioRun& run) {
  json algos = json::array();
  for (const auto& r : run.runs) {
    json rec = {
        {"algorithm", std::string(to_string(r.plan.algorithm))},
        {"found", r.plan.found},
    };
    if (r.plan.found) {
      rec["edge_cost_total"] = r.plan.total_cost;
      rec["surface_length"] = r.surface_length;
      rec["path_node_count"] = r.plan.node_sequence.size();
      rec["node_sequence"] = r.plan.node_sequence;
      rec["per_edge_costs"] = r.plan.per_edge_costs;
      rec["lifted_chord_length"] = r.lifted.total_chord_length;
    }
    rec["expanded_count"] = r.plan.expanded_count;
    algos.push_back(std::move(rec));
  }
  json j = {
      {"scenario", to_json(run.scenario)},
      {"seed", run.scenario.seed},
      {"node_count", run.nodes.size()},
      {"algorithms", std::move(algos)},
  };
  if (run.warning) j["warning"] = *run.warning;
  return j;
}

json timing_json(const ScenarioRun& run) {
  json j = json::object();
  for (const auto& r : run.runs)
    j[std::string(to_string(r.plan.algorithm))] = {{"search_seconds", std::chrono::duration<double>(r.plan.elapsed).count()}};
  return j;
}

void write_run_artifacts(const ScenarioRun& run, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_for_write(dir / "nodes.csv");
    out << "x1,x2\n";
    for (const auto& p : run.nodes) out << fmt_double(p.x1) << ',' << fmt_double(p.x2) << '\n';
  }
  for (const auto& r : run.runs) {
    if (!r.plan.found) continue;
    const std::string stem(to_string(r.plan.algorithm));
    {
      auto out = open_for_write(dir / (stem + "_polyline.csv"));
      out << "x1,x2\n";
      for (const auto& p : r.plan.planar_polyline) out << fmt_double(p.x1) << ',' << fmt_double(p.x2) << '\n';
    }
    {
      auto out = open_for_write(dir / (stem + "_path3d.csv"));
      out << "t,x1,x2,x3\n";
      const auto t = r.lifted.arc_parameter();
      for (std::size_t i = 0; i < r.lifted.samples.size(); ++i) {
        const Point3& s = r.lifted.samples[i];
        out << fmt_double(t[i]) << ',' << fmt_double(s.x1) << ',' << fmt_double(s.x2) << ',' << fmt_double(s.x3)
            << '\n';
      }
    }
  }
  open_for_write(dir / "summary.json") << summary_json(run).dump(2) << '\n';
  open_for_write(dir / "timing.json") << timing_json(run).dump(2) << '\n';
}

Stats describe(const std::vector<double>& values) {
  Stats s;
  s.count = values.size();
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

SweepResult run_seed_sweep(const Scenario& sc, const std::vector<std::uint64_t>& seeds, const RunOptions& opts) {
  if (seeds.empty()) throw std::invalid_argument("run_seed_sweep: needs at least one seed");
  SweepResult sweep;
  sweep.seeds = seeds;
  for (std::uint64_t seed : seeds) {
    Scenario s = sc;
    s.seed = seed;
    sweep.runs.push_back(run_scenario(s, opts));
  }
  for (Algorithm algo : sc.algorithms) {
    AlgorithmAggregate agg;
    agg.algorithm = algo;
    std::vector<double> costs;
    std::vector<double> lengths;
    for (const auto& run : sweep.runs) {
      const AlgorithmRun* r = run.find(algo);
      if (!r || !r->plan.found) {
        ++agg.failures;
        continue;
      }
      costs.push_back(r->plan.total_cost);
      lengths.push_back(r->surface_length);
    }
    agg.edge_cost = describe(costs);
    agg.surface_length = describe(lengths);
    sweep.aggregates.push_back(agg);
  }
  return sweep;
}

json aggregate_json(const Scenario& sc, const SweepResult& sweep) {
  const auto stats = [](const Stats& s) {
    return json{{"count", s.count}, {"mean", s.mean}, {"min", s.min}, {"max", s.max}, {"stddev", s.stddev}};
  };
  json algos = json::array();
  for (const auto& a : sweep.aggregates) {
    algos.push_back({{"algorithm", std::string(to_string(a.algorithm))},
                     {"failures", a.failures},
                     {"edge_cost", stats(a.edge_cost)},
                     {"surface_length", stats(a.surface_length)}});
  }
  json seeds = sweep.seeds;
  return {{"scenario", to_json(sc)}, {"seeds", seeds}, {"algorithms", algos}};
}

}  // namespace rmd

// Serial reference vs OpenMP roadmap construction, plus search cost.
//
//   ./build/bench/rmd_bench --benchmark_filter=BuildGraph
//   OMP_NUM_THREADS=8 ./build/bench/rmd_bench

#include <benchmark/benchmark.h>

#include "rmd/planner.hpp"
#include "rmd/roadmap.hpp"
#include "rmd/scenario.hpp"

namespace {

const rmd::Scenario& three_peaks() {
  static const rmd::Scenario sc = *rmd::preset("three-peaks");
  return sc;
}

std::vector<rmd::Point2> nodes(std::size_t n) {
  const auto& sc = three_peaks();
  return rmd::sample_points(n, sc.workspace, 7, sc.start, sc.goal);
}

template <rmd::CostModel Model>
void BM_BuildGraphSerial(benchmark::State& state) {
  const auto pts = nodes(static_cast<std::size_t>(state.range(0)));
  const auto& rule = rmd::gauss_legendre_cached(rmd::default_gauss_points);
  for (auto _ : state) {
    auto r = rmd::build_graph_serial(pts, three_peaks().field, Model, rule);
    benchmark::DoNotOptimize(r.weights().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) - 1) / 2);
}

template <rmd::CostModel Model>
void BM_BuildGraphOmp(benchmark::State& state) {
  const auto pts = nodes(static_cast<std::size_t>(state.range(0)));
  const auto& rule = rmd::gauss_legendre_cached(rmd::default_gauss_points);
  for (auto _ : state) {
    auto r = rmd::build_graph(pts, three_peaks().field, Model, rule);
    benchmark::DoNotOptimize(r.weights().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) - 1) / 2);
}

void BM_Dijkstra(benchmark::State& state) {
  const auto& rule = rmd::gauss_legendre_cached(rmd::default_gauss_points);
  const auto r = rmd::build_graph(nodes(static_cast<std::size_t>(state.range(0))), three_peaks().field,
                                  rmd::CostModel::riemannian_length, rule);
  for (auto _ : state) benchmark::DoNotOptimize(rmd::dijkstra(r).total_cost);
}

void BM_AStar(benchmark::State& state) {
  const auto& rule = rmd::gauss_legendre_cached(rmd::default_gauss_points);
  const auto r = rmd::build_graph(nodes(static_cast<std::size_t>(state.range(0))), three_peaks().field,
                                  rmd::CostModel::riemannian_length, rule);
  for (auto _ : state) benchmark::DoNotOptimize(rmd::astar(r, three_peaks().field).total_cost);
}

}  // namespace

BENCHMARK(BM_BuildGraphSerial<rmd::CostModel::riemannian_length>)->Arg(100)->Arg(300)->Arg(700)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildGraphOmp<rmd::CostModel::riemannian_length>)->Arg(100)->Arg(300)->Arg(700)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildGraphSerial<rmd::CostModel::euclidean_chord_3d>)->Arg(700)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildGraphOmp<rmd::CostModel::euclidean_chord_3d>)->Arg(700)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dijkstra)->Arg(700)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AStar)->Arg(700)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

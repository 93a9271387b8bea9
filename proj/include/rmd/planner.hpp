#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rmd/quadrature.hpp"
#include "rmd/roadmap.hpp"
#include "rmd/surface.hpp"

namespace rmd {

enum class Algorithm { rm_dijkstra, euclid_dijkstra, euclid_astar };

std::string_view to_string(Algorithm algo);
// Accepts "rm-dijkstra", "dijkstra-euclid", "astar-euclid".
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct PlanResult {
  Algorithm algorithm = Algorithm::rm_dijkstra;
  // False when the frontier emptied before the goal was settled.
  bool found = false;
  std::vector<std::size_t> node_sequence;
  std::vector<Point2> planar_polyline;
  std::vector<double> per_edge_costs;
  double total_cost = 0.0;
  std::size_t expanded_count = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Binary-heap Dijkstra from start_idx to end_idx with early exit. Ties on
// tentative distance go to the lower node index.
PlanResult dijkstra(const Roadmap& r);

// A* with h(i) = 3D chord from lift(points[i]) to lift(goal), which never
// exceeds the remaining cost under either cost model.
PlanResult astar(const Roadmap& r, const HeightField& field);

// Re-measures a planar polyline under the Riemannian length.
double path_surface_length(const HeightField& field, const std::vector<Point2>& polyline, const QuadratureRule& rule);

}  // namespace rmd

#include "rmd/planner.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace rmd {

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::rm_dijkstra: return "rm-dijkstra";
    case Algorithm::euclid_dijkstra: return "dijkstra-euclid";
    case Algorithm::euclid_astar: return "astar-euclid";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::rm_dijkstra, Algorithm::euclid_dijkstra, Algorithm::euclid_astar})
    if (to_string(a) == name) return a;
  return std::nullopt;
}

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

PlanResult best_first(const Roadmap& r, const std::vector<double>& heuristic, Algorithm tag) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = r.size();
  const std::size_t start = r.start_idx();
  const std::size_t goal = r.end_idx();

  std::vector<double> dist(n, inf);
  std::vector<std::size_t> previous(n, n);
  std::vector<char> settled(n, 0);

  // (priority, node); std::greater on pairs breaks ties by lower index.
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  dist[start] = 0.0;
  frontier.emplace(heuristic[start], start);

  PlanResult result;
  result.algorithm = tag;

  while (!frontier.empty()) {
    const auto [priority, u] = frontier.top();
    frontier.pop();
    if (settled[u]) continue;
    if (priority > dist[u] + heuristic[u]) continue;  // stale
    settled[u] = 1;
    ++result.expanded_count;
    if (u == goal) {
      result.found = true;
      break;
    }
    const auto row = r.row(u);
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || settled[v] || row[v] == Roadmap::no_edge) continue;
      const double candidate = dist[u] + row[v];
      if (candidate < dist[v]) {
        dist[v] = candidate;
        previous[v] = u;
        frontier.emplace(candidate + heuristic[v], v);
      }
    }
  }

  if (result.found) {
    for (std::size_t v = goal; v != start; v = previous[v]) result.node_sequence.push_back(v);
    result.node_sequence.push_back(start);
    std::reverse(result.node_sequence.begin(), result.node_sequence.end());
    for (std::size_t idx : result.node_sequence) result.planar_polyline.push_back(r.point(idx));
    for (std::size_t k = 1; k < result.node_sequence.size(); ++k) {
      const double w = r.weight(result.node_sequence[k - 1], result.node_sequence[k]);
      result.per_edge_costs.push_back(w);
      result.total_cost += w;
    }
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0);
  return result;
}

}  // namespace

PlanResult dijkstra(const Roadmap& r) {
  const Algorithm tag =
      r.cost_model() == CostModel::riemannian_length ? Algorithm::rm_dijkstra : Algorithm::euclid_dijkstra;
  return best_first(r, std::vector<double>(r.size(), 0.0), tag);
}

PlanResult astar(const Roadmap& r, const HeightField& field) {
  const Point3 goal = lift_point(field, r.point(r.end_idx()));
  std::vector<double> heuristic(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) heuristic[i] = distance(lift_point(field, r.point(i)), goal);
  return best_first(r, heuristic, Algorithm::euclid_astar);
}

double path_surface_length(const HeightField& field, const std::vector<Point2>& polyline, const QuadratureRule& rule) {
  if (polyline.size() < 2) throw std::invalid_argument("path_surface_length: needs at least two points");
  double total = 0.0;
  for (std::size_t k = 1; k < polyline.size(); ++k) total += rm_line_distance(field, {polyline[k - 1], polyline[k]}, rule);
  return total;
}

}  // namespace rmd

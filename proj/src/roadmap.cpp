#include "rmd/roadmap.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rmd {

void Workspace::validate() const {
  if (!(min1 < max1) || !(min2 < max2)) throw std::invalid_argument("workspace: min must be below max on both axes");
}

Roadmap::Roadmap(std::vector<Point2> points, std::vector<double> weights, CostModel model, std::uint64_t seed,
                 std::size_t start_idx, std::size_t end_idx)
    : points_(std::move(points)),
      weights_(std::move(weights)),
      model_(model),
      seed_(seed),
      start_idx_(start_idx),
      end_idx_(end_idx) {
  const std::size_t n = points_.size();
  if (n < 2) throw std::invalid_argument("roadmap: needs at least two nodes");
  if (weights_.size() != n * n) throw std::invalid_argument("roadmap: weight matrix must be n*n");
  if (start_idx_ >= n || end_idx_ >= n) throw std::invalid_argument("roadmap: start/end index out of range");
  for (std::size_t i = 0; i < n; ++i) {
    if (weights_[i * n + i] != 0.0) throw std::invalid_argument("roadmap: diagonal must be zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = weights_[i * n + j];
      if (w != weights_[j * n + i]) throw std::invalid_argument("roadmap: weight matrix must be symmetric");
      if (!(w >= 0.0)) throw std::invalid_argument("roadmap: weights must be non-negative");
    }
  }
}

std::vector<Point2> sample_points(std::size_t n, const Workspace& ws, std::uint64_t seed, Point2 start, Point2 goal) {
  if (n < 2) throw std::invalid_argument("sample_points: n must be at least 2");
  ws.validate();
  if (!ws.contains(start)) throw std::invalid_argument("sample_points: start lies outside the workspace");
  if (!ws.contains(goal)) throw std::invalid_argument("sample_points: goal lies outside the workspace");

  // 53 random bits -> [0, 1); avoids the implementation-defined
  // std::uniform_real_distribution so node sets match across toolchains.
  std::mt19937_64 gen(seed);
  const auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };

  std::vector<Point2> points;
  points.reserve(n);
  points.push_back(start);
  points.push_back(goal);
  for (std::size_t i = 2; i < n; ++i) {
    const double u1 = unit();
    const double u2 = unit();
    points.push_back({ws.min1 + u1 * (ws.max1 - ws.min1), ws.min2 + u2 * (ws.max2 - ws.min2)});
  }
  return points;
}

namespace {

void fill_row(std::span<const Point2> points, std::vector<double>& weights, std::size_t i, const HeightField& field,
              CostModel model, const QuadratureRule& rule) {
  const std::size_t n = points.size();
  for (std::size_t j = i + 1; j < n; ++j) {
    const double w = edge_cost(field, {points[i], points[j]}, model, rule);
    weights[i * n + j] = w;
    weights[j * n + i] = w;
  }
}

}  // namespace

Roadmap build_graph(std::vector<Point2> points, const HeightField& field, CostModel model,
                    const QuadratureRule& rule, std::uint64_t seed) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("build_graph: needs at least two points");
  std::vector<double> weights(n * n, 0.0);

  // Rows shrink with i, so hand them out dynamically. Each pair is written by
  // exactly one iteration.
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    fill_row(points, weights, static_cast<std::size_t>(i), field, model, rule);
  }
  return Roadmap(std::move(points), std::move(weights), model, seed);
}

Roadmap build_graph_serial(std::vector<Point2> points, const HeightField& field, CostModel model,
                           const QuadratureRule& rule, std::uint64_t seed) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("build_graph_serial: needs at least two points");
  std::vector<double> weights(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) fill_row(points, weights, i, field, model, rule);
  return Roadmap(std::move(points), std::move(weights), model, seed);
}

Roadmap prune_knn(const Roadmap& r, std::size_t k) {
  if (k == 0) throw std::invalid_argument("prune_knn: k must be at least 1");
  const std::size_t n = r.size();
  if (k >= n - 1) return r;

  std::vector<char> keep(n * n, 0);
  std::vector<std::size_t> order;
  order.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    order.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) order.push_back(j);
    const Point2 pi = r.point(i);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        const double da = distance(pi, r.point(a));
                        const double db = distance(pi, r.point(b));
                        return da < db || (da == db && a < b);
                      });
    for (std::size_t m = 0; m < k; ++m) {
      keep[i * n + order[m]] = 1;
      keep[order[m] * n + i] = 1;
    }
  }

  std::vector<double> weights(r.weights().begin(), r.weights().end());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !keep[i * n + j]) weights[i * n + j] = Roadmap::no_edge;

  Roadmap pruned(std::vector<Point2>(r.points().begin(), r.points().end()), std::move(weights), r.cost_model(),
                 r.seed(), r.start_idx(), r.end_idx());
  if (!start_goal_connected(pruned)) pruned.set_warning("knn pruning disconnected start from goal");
  return pruned;
}

bool start_goal_connected(const Roadmap& r) {
  const std::size_t n = r.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{r.start_idx()};
  seen[r.start_idx()] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    if (u == r.end_idx()) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && r.has_edge(u, v)) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

}  // namespace rmd

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmd/edge_cost.hpp"
#include "rmd/geometry.hpp"
#include "rmd/quadrature.hpp"
#include "rmd/surface.hpp"

namespace rmd {

struct Workspace {
  double min1 = -1.0;
  double max1 = 11.0;
  double min2 = -1.0;
  double max2 = 11.0;

  bool contains(Point2 p) const { return p.x1 >= min1 && p.x1 <= max1 && p.x2 >= min2 && p.x2 <= max2; }
  // Throws std::invalid_argument unless min < max on both axes.
  void validate() const;
};

// Complete (or pruned) graph over sampled planar nodes with a dense,
// symmetric weight matrix. Missing edges hold no_edge, never 0.
class Roadmap {
 public:
  static constexpr double no_edge = std::numeric_limits<double>::infinity();

  // weights is row-major n*n; must be symmetric with a zero diagonal.
  Roadmap(std::vector<Point2> points, std::vector<double> weights, CostModel model, std::uint64_t seed = 0,
          std::size_t start_idx = 0, std::size_t end_idx = 1);

  std::size_t size() const { return points_.size(); }
  std::span<const Point2> points() const { return points_; }
  Point2 point(std::size_t i) const { return points_[i]; }
  std::size_t start_idx() const { return start_idx_; }
  std::size_t end_idx() const { return end_idx_; }
  CostModel cost_model() const { return model_; }
  std::uint64_t seed() const { return seed_; }

  double weight(std::size_t i, std::size_t j) const { return weights_[i * size() + j]; }
  bool has_edge(std::size_t i, std::size_t j) const { return i != j && weight(i, j) != no_edge; }
  std::span<const double> row(std::size_t i) const { return std::span(weights_).subspan(i * size(), size()); }
  std::span<const double> weights() const { return weights_; }

  // Set by prune_knn when the pruned graph no longer connects start and goal.
  const std::optional<std::string>& warning() const { return warning_; }
  void set_warning(std::string w) { warning_ = std::move(w); }

 private:
  std::vector<Point2> points_;
  std::vector<double> weights_;
  CostModel model_;
  std::uint64_t seed_;
  std::size_t start_idx_;
  std::size_t end_idx_;
  std::optional<std::string> warning_;
};

// [start, goal, n-2 uniform samples over ws]. Deterministic in all arguments.
std::vector<Point2> sample_points(std::size_t n, const Workspace& ws, std::uint64_t seed, Point2 start, Point2 goal);

// Complete graph, one edge-cost evaluation per unordered pair, OpenMP-parallel
// over rows. Bitwise identical to build_graph_serial.
Roadmap build_graph(std::vector<Point2> points, const HeightField& field, CostModel model,
                    const QuadratureRule& rule, std::uint64_t seed = 0);

// Single-threaded reference for build_graph.
Roadmap build_graph_serial(std::vector<Point2> points, const HeightField& field, CostModel model,
                           const QuadratureRule& rule, std::uint64_t seed = 0);

// Keeps each node's k nearest planar neighbours, symmetrised (an edge
// survives if either endpoint keeps it).
Roadmap prune_knn(const Roadmap& r, std::size_t k);

// True when end_idx is reachable from start_idx.
bool start_goal_connected(const Roadmap& r);

}  // namespace rmd

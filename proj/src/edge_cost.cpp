#include "rmd/edge_cost.hpp"

#include <cmath>
#include <stdexcept>

#include "rmd/metric.hpp"

namespace rmd {

std::string_view to_string(CostModel model) {
  switch (model) {
    case CostModel::riemannian_length: return "riemannian-length";
    case CostModel::euclidean_chord_3d: return "euclidean-chord-3d";
  }
  return "unknown";
}

double rm_line_distance(const HeightField& field, const Segment& seg, const QuadratureRule& rule) {
  if (seg.start == seg.end) return 0.0;
  const Vec2 d = seg.end - seg.start;
  const auto integrand = [&](double t) {
    const MetricTensor h = metric_at(field, seg.at(t));
    return std::sqrt(inner(h, d, d));
  };
  return integrate(integrand, 0.0, 1.0, rule);
}

double euclid3d_distance(const HeightField& field, const Segment& seg) {
  return distance(lift_point(field, seg.start), lift_point(field, seg.end));
}

double lifted_polyline_length(const HeightField& field, const Segment& seg, std::size_t m) {
  if (m == 0) throw std::invalid_argument("lifted_polyline_length: m must be at least 1");
  const double md = static_cast<double>(m);
  Point3 prev = lift_point(field, seg.start);
  double total = 0.0;
  for (std::size_t k = 1; k <= m; ++k) {
    const Point2 p = k == m ? seg.end : seg.at(static_cast<double>(k) / md);
    const Point3 cur = lift_point(field, p);
    total += distance(prev, cur);
    prev = cur;
  }
  return total;
}

double edge_cost(const HeightField& field, const Segment& seg, CostModel model, const QuadratureRule& rule) {
  switch (model) {
    case CostModel::riemannian_length: return rm_line_distance(field, seg, rule);
    case CostModel::euclidean_chord_3d: return euclid3d_distance(field, seg);
  }
  throw std::logic_error("edge_cost: unknown cost model");
}

}  // namespace rmd

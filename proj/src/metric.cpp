#include "rmd/metric.hpp"

#include <cmath>

namespace rmd {

MetricTensor metric_at(const HeightField& field, Point2 p) {
  const Vec2 g = gradient(field, p);
  return {1.0 + g.x1 * g.x1, g.x1 * g.x2, 1.0 + g.x2 * g.x2, p};
}

double det(const MetricTensor& h) { return h.h11 * h.h22 - h.h12 * h.h12; }

MetricInverse inverse(const MetricTensor& h) {
  const double d = det(h);
  return {h.h22 / d, -h.h12 / d, h.h11 / d};
}

double inner(const MetricTensor& h, Vec2 u, Vec2 v) {
  return h.h11 * u.x1 * v.x1 + h.h12 * (u.x1 * v.x2 + u.x2 * v.x1) + h.h22 * u.x2 * v.x2;
}

double isometry_residual(const HeightField& field, Point2 p, Vec2 u, Vec2 v) {
  const double planar = inner(metric_at(field, p), u, v);
  const double lifted = dot(lift_tangent(field, p, u), lift_tangent(field, p, v));
  return std::abs(planar - lifted);
}

}  // namespace rmd

#pragma once

#include "rmd/geometry.hpp"
#include "rmd/surface.hpp"

namespace rmd {

// Pullback of the Euclidean metric of R^3 to the projection plane
// (first fundamental form of the height surface). Upper triangle only.
struct MetricTensor {
  double h11 = 1.0;
  double h12 = 0.0;
  double h22 = 1.0;
  Point2 at_point{};
};

struct MetricInverse {
  double k11 = 1.0;
  double k12 = 0.0;
  double k22 = 1.0;
};

MetricTensor metric_at(const HeightField& field, Point2 p);

double det(const MetricTensor& h);

MetricInverse inverse(const MetricTensor& h);

// h(u, v) = h11 u1 v1 + h12 (u1 v2 + u2 v1) + h22 u2 v2
double inner(const MetricTensor& h, Vec2 u, Vec2 v);

// |h(u, v) - <lift(u), lift(v)>| at p. Zero up to rounding because the
// projection is an isometric immersion for the pullback metric.
double isometry_residual(const HeightField& field, Point2 p, Vec2 u, Vec2 v);

}  // namespace rmd

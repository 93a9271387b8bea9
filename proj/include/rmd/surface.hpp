#pragma once

#include <variant>
#include <vector>

#include "rmd/geometry.hpp"

namespace rmd {

// A * exp(-|p - center|^2 / (2 sigma^2)). The variance is stored so that
// exponent coefficients such as 1/5 or 1/2 are represented exactly.
class GaussianPeak {
 public:
  static GaussianPeak with_sigma(double amplitude, Point2 center, double sigma);
  static GaussianPeak with_variance(double amplitude, Point2 center, double variance);

  double amplitude() const { return amplitude_; }
  Point2 center() const { return center_; }
  double variance() const { return variance_; }
  double sigma() const;

  double height(Point2 p) const;
  Vec2 gradient(Point2 p) const;

 private:
  GaussianPeak(double amplitude, Point2 center, double variance);

  double amplitude_;
  Point2 center_;
  double variance_;
};

struct Flat {
  double level = 0.0;
};

// x3 = a * x1 + b * x2
struct Plane {
  double a = 0.0;
  double b = 0.0;
};

struct PeakSum {
  std::vector<GaussianPeak> peaks;
};

// Analytic height surface x3(x1, x2), defined on all of R^2. Immutable.
class HeightField {
 public:
  using Shape = std::variant<Flat, Plane, PeakSum>;

  static HeightField flat(double level);
  static HeightField plane(double a, double b);
  static HeightField peaks(std::vector<GaussianPeak> peaks);

  const Shape& shape() const { return shape_; }

 private:
  explicit HeightField(Shape shape) : shape_(std::move(shape)) {}

  Shape shape_;
};

double height(const HeightField& field, Point2 p);

// Analytic (dx3/dx1, dx3/dx2).
Vec2 gradient(const HeightField& field, Point2 p);

// Central differences; only used to check gradient().
Vec2 gradient_fd(const HeightField& field, Point2 p, double step);

Point3 lift_point(const HeightField& field, Point2 p);

// Push-forward of a planar tangent vector: (v1, v2, v1*dx3/dx1 + v2*dx3/dx2).
Vec3 lift_tangent(const HeightField& field, Point2 p, Vec2 v);

}  // namespace rmd

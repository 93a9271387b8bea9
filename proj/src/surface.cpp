#include "rmd/surface.hpp"

#include <cmath>
#include <stdexcept>

namespace rmd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

GaussianPeak::GaussianPeak(double amplitude, Point2 center, double variance)
    : amplitude_(amplitude), center_(center), variance_(variance) {
  if (!std::isfinite(amplitude)) throw std::invalid_argument("gaussian peak: amplitude must be finite");
  if (!is_finite(center)) throw std::invalid_argument("gaussian peak: center must be finite");
  if (!(variance > 0.0) || !std::isfinite(variance))
    throw std::invalid_argument("gaussian peak: spread must be strictly positive");
}

GaussianPeak GaussianPeak::with_sigma(double amplitude, Point2 center, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian peak: sigma must be strictly positive");
  return GaussianPeak(amplitude, center, sigma * sigma);
}

GaussianPeak GaussianPeak::with_variance(double amplitude, Point2 center, double variance) {
  return GaussianPeak(amplitude, center, variance);
}

double GaussianPeak::sigma() const { return std::sqrt(variance_); }

double GaussianPeak::height(Point2 p) const {
  const Vec2 d = p - center_;
  return amplitude_ * std::exp(-dot(d, d) / (2.0 * variance_));
}

Vec2 GaussianPeak::gradient(Point2 p) const {
  const Vec2 d = p - center_;
  const double e = amplitude_ * std::exp(-dot(d, d) / (2.0 * variance_));
  const double s = -e / variance_;
  return {s * d.x1, s * d.x2};
}

HeightField HeightField::flat(double level) {
  if (!std::isfinite(level)) throw std::invalid_argument("flat field: level must be finite");
  return HeightField(Flat{level});
}

HeightField HeightField::plane(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("plane field: slopes must be finite");
  return HeightField(Plane{a, b});
}

HeightField HeightField::peaks(std::vector<GaussianPeak> peaks) {
  return HeightField(PeakSum{std::move(peaks)});
}

double height(const HeightField& field, Point2 p) {
  return std::visit(overloaded{
                        [](const Flat& f) { return f.level; },
                        [&](const Plane& f) { return f.a * p.x1 + f.b * p.x2; },
                        [&](const PeakSum& f) {
                          double z = 0.0;
                          for (const auto& peak : f.peaks) z += peak.height(p);
                          return z;
                        },
                    },
                    field.shape());
}

Vec2 gradient(const HeightField& field, Point2 p) {
  return std::visit(overloaded{
                        [](const Flat&) { return Vec2{0.0, 0.0}; },
                        [](const Plane& f) { return Vec2{f.a, f.b}; },
                        [&](const PeakSum& f) {
                          Vec2 g{0.0, 0.0};
                          for (const auto& peak : f.peaks) g = g + peak.gradient(p);
                          return g;
                        },
                    },
                    field.shape());
}

Vec2 gradient_fd(const HeightField& field, Point2 p, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("gradient_fd: step must be positive");
  const double d1 = height(field, {p.x1 + step, p.x2}) - height(field, {p.x1 - step, p.x2});
  const double d2 = height(field, {p.x1, p.x2 + step}) - height(field, {p.x1, p.x2 - step});
  return {d1 / (2.0 * step), d2 / (2.0 * step)};
}

Point3 lift_point(const HeightField& field, Point2 p) { return {p.x1, p.x2, height(field, p)}; }

Vec3 lift_tangent(const HeightField& field, Point2 p, Vec2 v) {
  const Vec2 g = gradient(field, p);
  return {v.x1, v.x2, v.x1 * g.x1 + v.x2 * g.x2};
}

}  // namespace rmd

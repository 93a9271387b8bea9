#include "rmd/path_lift.hpp"

#include <stdexcept>

namespace rmd {

SurfacePath lift_path(const HeightField& field, const std::vector<Point2>& polyline, std::size_t samples_per_segment) {
  if (polyline.size() < 2) throw std::invalid_argument("lift_path: needs at least two polyline points");
  if (samples_per_segment == 0) throw std::invalid_argument("lift_path: samples_per_segment must be at least 1");

  SurfacePath path;
  const double m = static_cast<double>(samples_per_segment);
  path.samples.reserve((polyline.size() - 1) * samples_per_segment + 1);
  for (std::size_t s = 0; s + 1 < polyline.size(); ++s) {
    const Point2 a = polyline[s];
    const Vec2 d = polyline[s + 1] - a;
    path.segment_boundaries.push_back(path.samples.size());
    for (std::size_t k = 0; k < samples_per_segment; ++k) {
      path.samples.push_back(lift_point(field, a + (static_cast<double>(k) / m) * d));
    }
  }
  path.segment_boundaries.push_back(path.samples.size());
  path.samples.push_back(lift_point(field, polyline.back()));

  for (std::size_t i = 1; i < path.samples.size(); ++i)
    path.total_chord_length += distance(path.samples[i - 1], path.samples[i]);
  return path;
}

std::vector<double> SurfacePath::arc_parameter() const {
  std::vector<double> t(samples.size(), 0.0);
  double acc = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    acc += distance(samples[i - 1], samples[i]);
    t[i] = acc;
  }
  if (acc > 0.0)
    for (auto& v : t) v /= acc;
  return t;
}

}  // namespace rmd

#pragma once

#include <cstddef>
#include <vector>

#include "rmd/geometry.hpp"
#include "rmd/surface.hpp"

namespace rmd {

inline constexpr std::size_t default_lift_density = 200;

// Dense samples of the surface preimage of a planar polyline.
struct SurfacePath {
  std::vector<Point3> samples;
  // samples[segment_boundaries[k]] is the lift of polyline vertex k.
  std::vector<std::size_t> segment_boundaries;
  double total_chord_length = 0.0;

  // Cumulative chord length normalised to [0, 1], one entry per sample.
  std::vector<double> arc_parameter() const;
};

SurfacePath lift_path(const HeightField& field, const std::vector<Point2>& polyline, std::size_t samples_per_segment);

}  // namespace rmd

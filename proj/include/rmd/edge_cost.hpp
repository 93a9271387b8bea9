#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "rmd/geometry.hpp"
#include "rmd/quadrature.hpp"
#include "rmd/surface.hpp"

namespace rmd {

struct Segment {
  Point2 start;
  Point2 end;

  Point2 at(double t) const { return start + t * (end - start); }
};

enum class CostModel {
  riemannian_length,    // length of the lifted segment, via the pullback metric
  euclidean_chord_3d,   // straight 3D distance between lifted endpoints
};

std::string_view to_string(CostModel model);

// Integral over t in [0, 1] of sqrt(h(gamma(t))(d, d)), d = end - start, with
// the metric evaluated along the segment. Zero-length segments return 0.
double rm_line_distance(const HeightField& field, const Segment& seg, const QuadratureRule& rule);

double euclid3d_distance(const HeightField& field, const Segment& seg);

// Sum of 3D chords over m equal planar pieces of the lifted segment.
double lifted_polyline_length(const HeightField& field, const Segment& seg, std::size_t m);

double edge_cost(const HeightField& field, const Segment& seg, CostModel model, const QuadratureRule& rule);

}  // namespace rmd

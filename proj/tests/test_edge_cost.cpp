#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "rmd/edge_cost.hpp"

using namespace rmd;
using rmd::testing::Gen;

namespace {
const QuadratureRule& gl16() { return gauss_legendre_cached(16); }
}  // namespace

TEST_CASE("riemannian length on flat and planar fields") {
  for (std::size_t n : {1u, 2u, 5u, 16u})
    CHECK(std::abs(rm_line_distance(HeightField::flat(7), {{0, 0}, {3, 4}}, gauss_legendre(n)) - 5.0) < 1e-12);
  CHECK(std::abs(rm_line_distance(HeightField::plane(1, 0), {{0, 0}, {1, 0}}, gl16()) - std::sqrt(2.0)) < 1e-12);
  CHECK(rm_line_distance(testing::one_peak_field(), {{5, 6}, {5, 6}}, gl16()) == 0.0);
}

TEST_CASE("one-peak diagonal against the Simpson oracle") {
  const auto field = testing::one_peak_field();
  const Segment diag{{0, 0}, {10, 10}};
  // frozen: composite Simpson, 10^6 subintervals
  const double oracle = testing::simpson_segment_length(field, diag.start, diag.end, 1'000'000);
  CHECK(oracle == doctest::Approx(19.7114345460217).epsilon(1e-12));

  // The peak is narrow relative to this 14-unit segment: a single 16-point
  // rule is only good to ~6.5e-3 here, 96 points reach 1e-6.
  const double gl16_len = rm_line_distance(field, diag, gl16());
  CHECK(gl16_len == doctest::Approx(19.5824415279586).epsilon(1e-12));
  CHECK(std::abs(gl16_len / oracle - 1.0) < 1e-2);
  CHECK(std::abs(rm_line_distance(field, diag, gauss_legendre(96)) / oracle - 1.0) < 1e-6);
  CHECK(std::abs(rm_line_distance(field, diag, gauss_legendre(128)) / oracle - 1.0) < 1e-9);

  // Lifted-curve length converges to the same value.
  const double lifted = lifted_polyline_length(field, diag, 1'000'000);
  CHECK(std::abs(lifted / oracle - 1.0) < 1e-9);
}

TEST_CASE("euclidean chord cost") {
  CHECK(euclid3d_distance(HeightField::flat(0), {{0, 0}, {3, 4}}) == 5.0);
  CHECK(euclid3d_distance(HeightField::plane(1, 0), {{0, 0}, {1, 0}}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(euclid3d_distance(testing::one_peak_field(), {{5, 6}, {5, 6}}) == 0.0);
}

TEST_CASE("lifted polyline length") {
  for (std::size_t m : {1u, 3u, 1000u}) {
    CHECK(lifted_polyline_length(HeightField::flat(0), {{0, 0}, {3, 4}}, m) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(lifted_polyline_length(HeightField::plane(1, 0), {{0, 0}, {1, 0}}, m) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lifted_polyline_length(HeightField::flat(0), {{0, 0}, {1, 1}}, 0), std::invalid_argument);

  // doubling nests the sample points, so the length cannot shrink
  const auto field = testing::three_peak_field();
  const Segment seg{{-1, 0}, {10, 9}};
  double prev = 0.0;
  for (std::size_t m = 1; m <= 4096; m *= 2) {
    const double len = lifted_polyline_length(field, seg, m);
    CHECK(len >= prev - 1e-12);
    prev = len;
  }
}

TEST_CASE("cost model dispatch") {
  const auto field = testing::four_peak_field();
  const Segment seg{{1, 1}, {4, 6}};
  CHECK(edge_cost(field, seg, CostModel::riemannian_length, gl16()) == rm_line_distance(field, seg, gl16()));
  CHECK(edge_cost(field, seg, CostModel::euclidean_chord_3d, gl16()) == euclid3d_distance(field, seg));
  CHECK(to_string(CostModel::riemannian_length) == "riemannian-length");
}

TEST_CASE("property: planar <= chord <= riemannian, and symmetry") {
  Gen gen(31);
  for (const auto& field : testing::terrain_fields()) {
    for (int i = 0; i < 200; ++i) {
      const Segment seg{gen.point(), gen.point()};
      const double planar = distance(seg.start, seg.end);
      const double chord = euclid3d_distance(field, seg);
      // Use an order that resolves the integrand; GL-16 under-resolves long
      // segments across the peaks (see the diagonal case above).
      const auto& rule = gauss_legendre_cached(160);
      const double rm = rm_line_distance(field, seg, rule);
      CHECK(planar <= chord + 1e-12);
      CHECK(chord <= rm * (1.0 + 1e-6));
      const double back = rm_line_distance(field, {seg.end, seg.start}, gl16());
      const double fwd = rm_line_distance(field, seg, gl16());
      CHECK(std::abs(fwd - back) < 1e-12 * std::max(1.0, fwd));
    }
  }
}

TEST_CASE("property: flat field length is planar distance") {
  Gen gen(32);
  for (int i = 0; i < 300; ++i) {
    const auto field = HeightField::flat(gen.uniform(-4, 4));
    const Segment seg{gen.point(-50, 50), gen.point(-50, 50)};
    CHECK(std::abs(rm_line_distance(field, seg, gl16()) - distance(seg.start, seg.end)) < 1e-12 * std::max(1.0, distance(seg.start, seg.end)));
  }
}

TEST_CASE("property: metric length matches lifted length on short segments") {
  // Segments of roadmap-edge scale (<= 3 units) are resolved by GL-16.
  Gen gen(33);
  for (const auto& field : testing::terrain_fields()) {
    for (int i = 0; i < 50; ++i) {
      const Point2 a = gen.point();
      const Point2 b = a + Vec2{gen.uniform(-2, 2), gen.uniform(-2, 2)};
      const double rm = rm_line_distance(field, {a, b}, gl16());
      const double lifted = lifted_polyline_length(field, {a, b}, 100'000);
      if (rm > 0.0) CHECK(std::abs(rm - lifted) / rm < 1e-4);
    }
  }
}

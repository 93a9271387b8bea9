#pragma once

#include <cmath>

namespace rmd {

// Vectors in the projection plane.
struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x1, s * v.x2}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

struct Vec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
  friend constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x1, s * v.x2, s * v.x3}; }
  friend constexpr bool operator==(Vec3, Vec3) = default;
};

// Chart coordinates (x1, x2) on the projection plane.
struct Point2 {
  double x1 = 0.0;
  double x2 = 0.0;

  friend constexpr Vec2 operator-(Point2 a, Point2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend constexpr Point2 operator+(Point2 p, Vec2 v) { return {p.x1 + v.x1, p.x2 + v.x2}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

// A point of the embedded surface in R^3.
struct Point3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  friend constexpr Vec3 operator-(Point3 a, Point3 b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
  friend constexpr bool operator==(Point3, Point3) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x1 * b.x1 + a.x2 * b.x2; }
constexpr double dot(Vec3 a, Vec3 b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }

inline double norm(Vec2 v) { return std::hypot(v.x1, v.x2); }
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline double distance(Point3 a, Point3 b) { return norm(b - a); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x1) && std::isfinite(p.x2); }
inline bool is_finite(Vec2 v) { return std::isfinite(v.x1) && std::isfinite(v.x2); }

}  // namespace rmd

#pragma once

#include <cmath>
#include <numbers>
#include <optional>

namespace sarp::nav {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  bool operator==(const Vec2&) const = default;
};

struct Segment {
  Vec2 a;
  Vec2 b;
  bool operator==(const Segment&) const = default;
};

/// Wraps to (-pi, pi].
inline double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a + std::numbers::pi, two_pi);
  if (a <= 0.0) a += two_pi;
  return a - std::numbers::pi;
}

double point_segment_distance(Vec2 p, const Segment& s);

/// Distance along a unit-direction ray to the segment, if it is hit.
std::optional<double> ray_segment_hit(Vec2 origin, Vec2 direction, const Segment& s);

bool segments_intersect(const Segment& s, const Segment& t);
double segment_segment_distance(const Segment& s, const Segment& t);

}  // namespace sarp::nav

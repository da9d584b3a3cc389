#pragma once

#include <array>
#include <cmath>

namespace elr {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
};

struct Segment {
  Point a;
  Point b;
};

struct Triangle {
  std::array<Point, 3> v;
};

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(b - a); }

// Sign of the determinant |q-p, r-p|: +1 counterclockwise, -1 clockwise,
// 0 collinear.  Exact for all finite doubles: a floating-point filter is
// tried first and an expansion-arithmetic evaluation settles the rest
// (big rationals when a coordinate is beyond 2^300 or below 2^-300).
int orient(Point p, Point q, Point r);

// Same predicate, always evaluated through the exact expansion path.
int orient_exact(Point p, Point q, Point r);

// True when p lies on the closed segment s (exact).
bool on_segment(Point p, const Segment& s);

// True iff the two closed segments share a point that is not an endpoint
// common to both.  Identical segments conflict.
bool segments_conflict(const Segment& s1, const Segment& s2);

// Lowest distance between point and closed segment / between two segments.
double point_segment_distance(Point p, const Segment& s);
double segment_distance(const Segment& s1, const Segment& s2);

struct TriangleMetrics {
  double perimeter = 0.0;
  // x-extensions of sides v0v1, v1v2, v2v0
  std::array<double, 3> side_x_extensions{};
  double y_extension = 0.0;
  // interior angles at v0, v1, v2 in degrees
  std::array<double, 3> angles{};
};

// Throws Error("collinear") for a degenerate triangle.
TriangleMetrics triangle_metrics(const Triangle& t);

double perimeter(const Triangle& t);

// Throws Error("collinear") for a degenerate triangle.
bool point_in_triangle(Point p, const Triangle& t, bool strict);

}  // namespace elr

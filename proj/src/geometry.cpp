#include "elr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "elr/error.hpp"

namespace elr {
namespace {

// Error-free transformations.  An expansion is a sum of doubles ordered by
// increasing magnitude with nonoverlapping bits; its sign is the sign of its
// largest nonzero component.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double bv = s - a;
  double av = s - bv;
  e = (a - av) + (b - bv);
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

// Adds b to the expansion in place.
void grow(std::vector<double>& e, double b) {
  double q = b;
  for (double& c : e) {
    double s, err;
    two_sum(q, c, s, err);
    c = err;
    q = s;
  }
  e.push_back(q);
}

int expansion_sign(const std::vector<double>& e) {
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (*it > 0) return 1;
    if (*it < 0) return -1;
  }
  return 0;
}

// Magnitudes for which no product or error term below over- or underflows.
bool in_safe_range(double v) {
  double a = std::abs(v);
  return a == 0 || (a >= 0x1p-300 && a <= 0x1p300);
}

int orient_rational(Point p, Point q, Point r) {
  using boost::multiprecision::cpp_rational;
  cpp_rational px(p.x), py(p.y);
  cpp_rational det = (cpp_rational(q.x) - px) * (cpp_rational(r.y) - py) -
                     (cpp_rational(q.y) - py) * (cpp_rational(r.x) - px);
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

constexpr double kEps = 0x1p-53;
constexpr double kCcwBound = (3.0 + 16.0 * kEps) * kEps;

}  // namespace

int orient_exact(Point p, Point q, Point r) {
  for (double v : {p.x, p.y, q.x, q.y, r.x, r.y})
    if (!in_safe_range(v)) return orient_rational(p, q, r);
  // (qx-px)(ry-py) - (qy-py)(rx-px), every difference and product split
  // into exact high and low parts.
  double ax, axl, ay, ayl, bx, bxl, by, byl;
  two_sum(q.x, -p.x, ax, axl);
  two_sum(r.y, -p.y, ay, ayl);
  two_sum(q.y, -p.y, bx, bxl);
  two_sum(r.x, -p.x, by, byl);
  std::vector<double> e;
  e.reserve(20);
  auto add_prod = [&](double u, double v, double sign) {
    double h, l;
    two_prod(u, v, h, l);
    grow(e, sign * l);
    grow(e, sign * h);
  };
  add_prod(ax, ay, 1);
  add_prod(ax, ayl, 1);
  add_prod(axl, ay, 1);
  add_prod(axl, ayl, 1);
  add_prod(bx, by, -1);
  add_prod(bx, byl, -1);
  add_prod(bxl, by, -1);
  add_prod(bxl, byl, -1);
  return expansion_sign(e);
}

int orient(Point p, Point q, Point r) {
  double detl = (q.x - p.x) * (r.y - p.y);
  double detr = (q.y - p.y) * (r.x - p.x);
  double det = detl - detr;
  double bound = kCcwBound * (std::abs(detl) + std::abs(detr));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return orient_exact(p, q, r);
}

bool on_segment(Point p, const Segment& s) {
  if (orient(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

bool segments_conflict(const Segment& s1, const Segment& s2) {
  auto is_end1 = [&](Point p) { return p == s1.a || p == s1.b; };
  auto is_end2 = [&](Point p) { return p == s2.a || p == s2.b; };
  if (is_end2(s1.a) && is_end2(s1.b)) return true;
  int o1 = orient(s1.a, s1.b, s2.a);
  int o2 = orient(s1.a, s1.b, s2.b);
  int o3 = orient(s2.a, s2.b, s1.a);
  int o4 = orient(s2.a, s2.b, s1.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  for (Point p : {s2.a, s2.b})
    if (!is_end1(p) && on_segment(p, s1)) return true;
  for (Point p : {s1.a, s1.b})
    if (!is_end2(p) && on_segment(p, s2)) return true;
  return false;
}

double point_segment_distance(Point p, const Segment& s) {
  Point d = s.b - s.a;
  double len2 = dot(d, d);
  if (len2 == 0) return dist(p, s.a);
  double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return dist(p, s.a + t * d);
}

double segment_distance(const Segment& s1, const Segment& s2) {
  int o1 = orient(s1.a, s1.b, s2.a);
  int o2 = orient(s1.a, s1.b, s2.b);
  int o3 = orient(s2.a, s2.b, s1.a);
  int o4 = orient(s2.a, s2.b, s1.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return 0.0;
  return std::min({point_segment_distance(s1.a, s2), point_segment_distance(s1.b, s2),
                   point_segment_distance(s2.a, s1), point_segment_distance(s2.b, s1)});
}

double perimeter(const Triangle& t) {
  return dist(t.v[0], t.v[1]) + dist(t.v[1], t.v[2]) + dist(t.v[2], t.v[0]);
}

TriangleMetrics triangle_metrics(const Triangle& t) {
  if (orient(t.v[0], t.v[1], t.v[2]) == 0) throw Error("collinear", "degenerate triangle");
  TriangleMetrics m;
  m.perimeter = perimeter(t);
  for (int i = 0; i < 3; ++i) {
    Point a = t.v[i], b = t.v[(i + 1) % 3], c = t.v[(i + 2) % 3];
    m.side_x_extensions[i] = std::abs(b.x - a.x);
    Point u = b - a, w = c - a;
    m.angles[i] = std::atan2(std::abs(cross(u, w)), dot(u, w)) * 180.0 / std::numbers::pi;
  }
  auto [lo, hi] = std::minmax({t.v[0].y, t.v[1].y, t.v[2].y});
  m.y_extension = hi - lo;
  return m;
}

bool point_in_triangle(Point p, const Triangle& t, bool strict) {
  int o = orient(t.v[0], t.v[1], t.v[2]);
  if (o == 0) throw Error("collinear", "degenerate triangle");
  for (int i = 0; i < 3; ++i) {
    int s = orient(t.v[i], t.v[(i + 1) % 3], p) * o;
    if (s < 0 || (strict && s == 0)) return false;
  }
  return true;
}

}  // namespace elr

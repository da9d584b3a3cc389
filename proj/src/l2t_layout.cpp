#include "l2t_layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elr/error.hpp"

namespace elr::detail {

LocalFrame::LocalFrame(const Triangle& t) : a1(t.v[0]), a2(t.v[1]) {
  Point d = a2 - a1;
  len = norm(d);
  ex = (1.0 / len) * d;
  ey = {-ex.y, ex.x};
  Point r = t.v[2] - a1;
  if (dot(r, ey) < 0) ey = -1.0 * ey;
  apex = {dot(r, ex), dot(r, ey)};
}

Point LocalFrame::world(Point p) const { return a1 + p.x * ex + p.y * ey; }

double LocalFrame::height_at(double x) const {
  if (x <= 0 || x >= len) return 0;
  double h = std::numeric_limits<double>::infinity();
  if (apex.x > 0) h = std::min(h, apex.y * x / apex.x);
  if (apex.x < len) h = std::min(h, apex.y * (len - x) / (len - apex.x));
  return h;
}

ApexChoice choose_apex(const LocalFrame& f, double l13, double l23, double kappa) {
  auto eval = [&](double x) {
    Point a{x, kappa * f.height_at(x)};
    return ApexChoice{a, norm(a) - l13, dist(a, Point{f.len, 0}) - l23};
  };
  auto score = [](const ApexChoice& c) { return std::min(c.s13, c.s23); };
  const int samples = 96;
  ApexChoice best = eval(0.5 * f.len);
  double best_x = 0.5 * f.len;
  for (int i = 1; i < samples; ++i) {
    double x = f.len * i / samples;
    ApexChoice c = eval(x);
    if (score(c) > score(best)) {
      best = c;
      best_x = x;
    }
  }
  // golden-section refinement around the best sample
  double lo = std::max(0.0, best_x - f.len / samples), hi = std::min(f.len, best_x + f.len / samples);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 60; ++it) {
    double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
    if (score(eval(m1)) < score(eval(m2)))
      lo = m1;
    else
      hi = m2;
  }
  ApexChoice refined = eval(0.5 * (lo + hi));
  return score(refined) > score(best) ? refined : best;
}

Layout l2t_layout(const TwoTree& h, const std::vector<int>& cls, const Triangle& frame, double l12,
                  double l13, double l23, const LayoutTuning& tune) {
  LocalFrame f(frame);
  Layout out;
  out.pos.assign(h.size(), Point{});
  out.pos[0] = frame.v[0];
  out.pos[1] = frame.v[1];
  out.min_spacing = f.len;
  if (h.size() == 2) {
    if (!(f.len > l12)) throw Error("frame-too-small", "root edge shorter than its minimum");
    return out;
  }

  int m[4] = {0, 0, 0, 0};
  for (int c : cls) ++m[c];

  ApexChoice ap = choose_apex(f, l13, l23, tune.kappa);
  double s12 = f.len - l12;
  if (!(ap.s13 > 0 && ap.s23 > 0 && s12 > 0))
    throw Error("frame-too-small", "no point of the frame is far enough from both base corners");

  Point a = ap.a;
  double rb = std::min(tune.omega * a.y, 0.45 * std::min(ap.s13, ap.s23));
  Point q{a.x, a.y - rb};
  double rc = std::min({tune.theta * (ap.s13 - rb), 0.5 * tune.theta * s12, tune.psi * norm(q)});
  double rd = std::min({tune.theta * (ap.s23 - rb), 0.5 * tune.theta * s12,
                        tune.psi * dist(q, Point{f.len, 0})});

  // Points per class, in order of use.
  std::vector<Point> pts[4];
  Point qw = f.world(q);
  for (int j = 0; j < m[3]; ++j) pts[3].push_back(f.world({a.x, a.y - rb * j / m[3]}));
  Point dc = (1.0 / dist(f.a1, qw)) * (qw - f.a1);
  Point dd = (1.0 / dist(f.a2, qw)) * (qw - f.a2);
  pts[1].push_back(f.a1);
  for (int k = 1; k < m[1]; ++k) pts[1].push_back(f.a1 + (rc * k / m[1]) * dc);
  pts[2].push_back(f.a2);
  for (int k = 1; k < m[2]; ++k) pts[2].push_back(f.a2 + (rd * k / m[2]) * dd);
  out.min_spacing = rb / m[3];
  if (m[1] > 1) out.min_spacing = std::min(out.min_spacing, rc / m[1]);
  if (m[2] > 1) out.min_spacing = std::min(out.min_spacing, rd / m[2]);

  int used[4] = {0, 1, 1, 0};
  int cur = 0;  // edge id of the current nontrivial edge
  while (true) {
    auto apexes = h.apexes(cur);
    if (apexes.empty()) break;
    Edge e = h.edge(cur);
    int next = -1;
    Vertex last = -1;
    for (Vertex x : apexes)
      for (Vertex w : {e.u, e.v}) {
        int s = h.edge_id_of(w, x);
        if (!h.is_trivial(s)) {
          next = s;
          last = x;
        }
      }
    for (Vertex x : apexes) {
      if (x == last) continue;
      out.pos[x] = pts[cls[x]][used[cls[x]]++];
    }
    if (last < 0) break;
    out.pos[last] = pts[cls[last]][used[cls[last]]++];
    cur = next;
  }
  return out;
}

}  // namespace elr::detail

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "elr/drawers.hpp"
#include "elr/error.hpp"

namespace elr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFloor = 1e-12;

// Quantities involving one vertex: distance to the edge of its cluster disk,
// to the other vertices and edges, and the distance of its edges to
// everything they do not touch.  `low` is the smallest of them and `cost`
// the log barrier over all of them.  Each quantity involving the vertex
// appears here, so lowering one vertex's cost lowers the total.
struct Slack {
  double low = kInf;
  double cost = 0;
  bool valid() const { return low > 0; }
  void add(double q) {
    low = std::min(low, q);
    cost -= q > 0 ? std::log(q) : -kInf;
  }
};

class Conditioner {
 public:
  Conditioner(const Graph& g, const Drawing& d, const std::vector<Point>& center, double radius)
      : g_(g), d_(d), center_(center), radius_(radius) {}

  // Stops early once the smallest quantity drops to `floor` or below.
  Slack at(Vertex y, Point p, double floor = -kInf) const {
    Slack s;
    auto done = [&] { return s.low <= floor; };
    s.add(radius_ - dist(p, center_[y]));
    if (!s.valid()) return s;
    auto nb = g_.neighbors(y);
    for (Vertex z = 0; z < d_.size(); ++z)
      if (z != y) s.add(dist(p, d_[z]));
    if (done()) return s;
    for (const Edge& e : g_.edges())
      if (e.u != y && e.v != y) s.add(point_segment_distance(p, d_.segment(e)));
    for (Vertex t : nb) {
      if (done()) return s;
      Segment own{p, d_[t]};
      for (Vertex z = 0; z < d_.size(); ++z)
        if (z != y && z != t) s.add(point_segment_distance(d_[z], own));
      for (const Edge& e : g_.edges()) {
        bool at_y = e.u == y || e.v == y, at_t = e.u == t || e.v == t;
        if (at_y) continue;
        if (at_t) {
          if (segments_conflict(own, d_.segment(e))) s.add(0);
        } else {
          s.add(segment_distance(own, d_.segment(e)));
        }
      }
      for (Vertex o : nb)
        if (o != t && segments_conflict(own, {p, d_[o]})) s.add(0);
    }
    return s;
  }

 private:
  const Graph& g_;
  const Drawing& d_;
  const std::vector<Point>& center_;
  double radius_;
};

// Descends the barrier for one vertex along a finite-difference gradient.
// Steps stay below the vertex's smallest slack, so the motion is continuous
// and keeps the embedding.
void relax(const Conditioner& cond, Drawing& d, Vertex y, int rounds) {
  for (int r = 0; r < rounds; ++r) {
    Slack cur = cond.at(y, d[y]);
    if (!cur.valid()) return;
    double h = 1e-3 * cur.low;
    Point g{(cond.at(y, d[y] + Point{h, 0}).cost - cond.at(y, d[y] - Point{h, 0}).cost) / (2 * h),
            (cond.at(y, d[y] + Point{0, h}).cost - cond.at(y, d[y] - Point{0, h}).cost) / (2 * h)};
    double gn = norm(g);
    if (!(gn > 0) || !std::isfinite(gn)) return;
    Point dir = (-1.0 / gn) * g;
    bool moved = false;
    for (double f = 0.9; f > 1e-3; f *= 0.5) {
      Point p = d[y] + f * cur.low * dir;
      Slack s = cond.at(y, p);
      if (s.valid() && s.cost < cur.cost) {
        d[y] = p;
        moved = true;
        break;
      }
    }
    if (!moved) return;
  }
}

// Clockwise angular order of the drawn neighbors matches the rotation.
bool rotation_matches(const PlaneGraph& g, const Drawing& d, Vertex y) {
  const auto& rot = g.rotation(y);
  if (rot.size() < 3) return true;
  std::vector<std::pair<double, Vertex>> by_angle;
  for (Vertex t : rot) by_angle.emplace_back(-std::atan2(d[t].y - d[y].y, d[t].x - d[y].x), t);
  std::sort(by_angle.begin(), by_angle.end());
  std::vector<Vertex> order;
  for (auto& [a, t] : by_angle) order.push_back(t);
  return same_cyclic_walk(order, rot);
}

bool outer_is_clockwise(const PlaneGraph& g, const Drawing& d) {
  const auto& f = g.outer_face();
  double area = 0;
  for (std::size_t i = 0; i < f.size(); ++i) area += cross(d[f[i]], d[f[(i + 1) % f.size()]]);
  return area < 0;
}

}  // namespace

DrawReport draw_bipartite_maximal(const BipartitePlane& g, double epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw Error("invalid-epsilon", "epsilon must be positive");
  const double hi = 1.0 + epsilon;
  const double side = 1.0 + 0.5 * epsilon;
  PlaneGraph cur = gen_bipartite_maximal({}).graph;
  Drawing d(std::vector<Point>{{0, 0}, {side, 0}, {side, side}, {0, side}});
  // Every vertex stays within `radius` of the square corner it descends
  // from; any two adjacent corners then give a length inside the window.
  std::vector<Point> center = d.points();
  const double radius = 0.2 * epsilon;

  for (std::size_t step = 0; step < g.steps.size(); ++step) {
    auto [u, v, w] = g.steps[step];
    const auto& rot = cur.rotation(v);
    if (u == w || std::find(rot.begin(), rot.end(), u) == rot.end() ||
        std::find(rot.begin(), rot.end(), w) == rot.end())
      throw Error("invalid-op", "step " + std::to_string(step) + " does not name a path");
    Point pv = d[v];
    double from = std::atan2(d[u].y - pv.y, d[u].x - pv.x);
    double to = std::atan2(d[w].y - pv.y, d[w].x - pv.x);
    double sweep = from - to;  // clockwise angle from u to w
    while (sweep <= 0) sweep += 2 * std::numbers::pi;
    while (sweep > 2 * std::numbers::pi) sweep -= 2 * std::numbers::pi;

    double reach = Conditioner(cur.graph(), d, center, radius).at(v, pv).low;
    Vertex x = cur.graph().vertex_count();
    cur.split_vertex(u, v, w);
    d.push_back(pv);
    center.push_back(center[v]);
    const Graph& h = cur.graph();
    Conditioner cond(h, d, center, radius);

    // x starts near v, at the position with the most slack that keeps the
    // embedding.
    std::vector<Vertex> watch{x, v};
    for (Vertex t : h.neighbors(x)) watch.push_back(t);
    auto keeps_embedding = [&] {
      return std::all_of(watch.begin(), watch.end(), [&](Vertex y) { return rotation_matches(cur, d, y); });
    };
    // Candidates: a cone around the sector middle close to v (where the
    // embedding is guaranteed for small radii), then the whole cluster disk.
    double mid = from - 0.5 * sweep;
    double width = std::min(sweep, 2 * std::numbers::pi - sweep);
    std::vector<Point> cand;
    for (double r = 0.95 * reach; r >= kFloor; r *= 0.6)
      for (double f : {0.0, -0.15, 0.15, -0.3, 0.3, -0.42, 0.42})
        cand.push_back(pv + r * Point{std::cos(mid + f * width), std::sin(mid + f * width)});
    for (int ring = 1; ring <= 10; ++ring)
      for (int k = 0; k < 40; ++k) {
        double ang = 2 * std::numbers::pi * (k + 0.5 * (ring % 2)) / 40;
        cand.push_back(center[v] + (radius * ring / 10.5) * Point{std::cos(ang), std::sin(ang)});
      }
    Point best = pv;
    double best_s = -kInf;
    for (const Point& p : cand) {
      double s = cond.at(x, p, best_s).low;
      if (!(s > best_s)) continue;
      d[x] = p;
      if (keeps_embedding() && outer_is_clockwise(cur, d)) {
        best_s = s;
        best = p;
      }
    }
    if (!(best_s >= kFloor))
      throw Error("precision-exhausted", "no placement found at step " + std::to_string(step));
    d[x] = best;

    std::vector<Vertex> near{x, v};
    for (Vertex y : {x, v})
      for (Vertex t : h.neighbors(y)) near.push_back(t);
    for (int pass = 0; pass < 2; ++pass)
      for (Vertex y : near) relax(cond, d, y, 3);
    if (step % 8 == 7)
      for (Vertex y = 0; y < d.size(); ++y) relax(cond, d, y, 2);
    if (!outer_is_clockwise(cur, d))
      throw Error("invariant-violation", "outer face flipped at step " + std::to_string(step));
  }
  auto sorted_edges = [](const Graph& h) {
    auto e = h.edges();
    std::sort(e.begin(), e.end());
    return e;
  };
  if (sorted_edges(cur.graph()) != sorted_edges(g.graph.graph()))
    throw Error("invariant-violation", "replayed operations do not rebuild the input graph");
  return make_report(cur.graph(), std::move(d), hi);
}

}  // namespace elr

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "elr/drawers.hpp"
#include "elr/error.hpp"

namespace elr {
namespace {

// Longest root-to-leaf node count below each node, leaves count 1.
std::vector<int> subtree_depths(const Plane3Tree& g) {
  const auto& nodes = g.nodes();
  std::vector<int> depth(nodes.size(), 1);
  std::vector<int> order{0};
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!nodes[order[i]].leaf())
      for (int c : nodes[order[i]].children) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (!nodes[*it].leaf())
      for (int c : nodes[*it].children) depth[*it] = std::max(depth[*it], depth[c] + 1);
  return depth;
}

// Both x-gaps of a face (sorted by x) must be >= 1 and the larger one at
// least the depth of the face's subtree.
bool gaps_fit(double x0, double x1, double x2, int depth) {
  double xs[3] = {x0, x1, x2};
  std::sort(xs, xs + 3);
  double g1 = xs[1] - xs[0], g2 = xs[2] - xs[1];
  return std::min(g1, g2) >= 1 && std::max(g1, g2) >= depth;
}

// Vertical extent of the triangle at abscissa x, strictly between its
// leftmost and rightmost corner.
std::pair<double, double> chord(const Point& p, const Point& q, const Point& r, double x) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  const Point* v[3] = {&p, &q, &r};
  for (int i = 0; i < 3; ++i) {
    const Point& s = *v[i];
    const Point& t = *v[(i + 1) % 3];
    if (std::min(s.x, t.x) <= x && x <= std::max(s.x, t.x) && s.x != t.x) {
      double y = s.y + (t.y - s.y) * (x - s.x) / (t.x - s.x);
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
  }
  return {lo, hi};
}

}  // namespace

DrawReport draw_plane_3tree(const Plane3Tree& g, double epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw Error("invalid-epsilon", "epsilon must be positive");
  int k = rep_tree_depth(g);
  std::vector<int> depth = subtree_depths(g);
  Drawing d(g.vertex_count());
  d[0] = {0.0, epsilon};
  d[1] = {1.0, 0.0};
  d[2] = {k + 1.0, epsilon};
  const auto& nodes = g.nodes();
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const auto& nd = nodes[stack.back()];
    stack.pop_back();
    if (nd.leaf()) continue;
    const Point &p = d[nd.face[0]], &q = d[nd.face[1]], &r = d[nd.face[2]];
    double left = std::min({p.x, q.x, r.x}), right = std::max({p.x, q.x, r.x});
    // Any abscissa keeping every child face within the gap rule works; the
    // widest vertical chord leaves the most room below.
    double best_x = 0, best_w = -1;
    for (double x = left + 1; x <= right - 1; x += 1) {
      if (std::abs(x - p.x) < 1 || std::abs(x - q.x) < 1 || std::abs(x - r.x) < 1) continue;
      bool fits = true;
      for (int c : nd.children) {
        const Face3& f = nodes[c].face;
        double xs[2];
        int m = 0;
        for (Vertex u : f)
          if (u != nd.vertex) xs[m++] = d[u].x;
        fits = fits && gaps_fit(xs[0], xs[1], x, depth[c]);
      }
      if (!fits) continue;
      auto [lo, hi] = chord(p, q, r, x);
      if (hi - lo > best_w) best_w = hi - lo, best_x = x;
    }
    if (!(best_w > 0))
      throw Error("invariant-violation", "no abscissa for vertex " + std::to_string(nd.vertex));
    auto [lo, hi] = chord(p, q, r, best_x);
    d[nd.vertex] = {best_x, 0.5 * (lo + hi)};
    for (int c : nd.children) stack.push_back(c);
  }
  return make_report(g.graph(), std::move(d), k + 1.0 + epsilon);
}

}  // namespace elr

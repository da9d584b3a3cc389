#include <algorithm>

#include "elr/drawers.hpp"
#include "elr/error.hpp"

namespace elr {

Decomposition decompose_2tree(const TwoTree& g) {
  int n = g.size();
  // below[e]: vertices hanging below edge e (apexes and, recursively, theirs)
  std::vector<long> below(g.edge_count(), 0);
  for (Vertex x = n - 1; x >= 2; --x) {
    auto [p, q] = g.parents(x);
    below[g.edge_id_of(p, q)] += 1 + below[g.edge_id_of(p, x)] + below[g.edge_id_of(q, x)];
  }

  std::vector<Edge> h_edges{g.edge(0)};
  std::vector<Edge> designated{g.edge(0)};
  int cur = 0;
  while (true) {
    Edge e = g.edge(cur);
    auto apexes = g.apexes(cur);
    if (apexes.empty()) break;
    int best = -1;
    long best_size = -1;
    Vertex best_apex = 0, best_end = 0;
    for (Vertex x : apexes) {
      for (Vertex w : {e.u, e.v}) {
        int s = g.edge_id_of(w, x);
        h_edges.push_back(g.edge(s));
        long size = below[s];
        bool better = size > best_size || (size == best_size && (x < best_apex || (x == best_apex && w < best_end)));
        if (better) {
          best = s;
          best_size = size;
          best_apex = x;
          best_end = w;
        }
      }
    }
    cur = best;
    designated.push_back(g.edge(cur));
  }
  Decomposition d = h_components(g, h_edges);
  d.designated = std::move(designated);
  return d;
}

ComponentBounds component_bounds(const TwoTree& g, const Decomposition& d) {
  ComponentBounds b;
  b.n = g.size() - 1;
  for (const Component& c : d.components) {
    long s = c.vertex_count() - 1;
    switch (c.root_class) {
      case RootClass::k13: b.x = std::max(b.x, s); break;
      case RootClass::k23: b.y = std::max(b.y, s); break;
      case RootClass::k12: b.z = std::max(b.z, s); break;
    }
  }
  return b;
}

bool component_bounds_hold(const ComponentBounds& b) {
  // a <= n/2  <=>  2a <= n
  bool z_ok = 2 * b.z <= b.n;
  bool first = 2 * b.x <= b.n && 2 * b.y <= b.n - b.x;
  bool second = 2 * b.y <= b.n && 2 * b.x <= b.n - b.y;
  return z_ok && (first || second);
}

}  // namespace elr

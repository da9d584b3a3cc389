#include "elr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "elr/error.hpp"
#include "elr/generators.hpp"

namespace elr {
namespace {

struct Box {
  double x0, y0, x1, y1;
};

Box box_of(const Segment& s) {
  return {std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y), std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y)};
}

bool boxes_meet(const Box& p, const Box& q) {
  return p.x0 <= q.x1 && q.x0 <= p.x1 && p.y0 <= q.y1 && q.y0 <= p.y1;
}

void fill_lengths(const Graph& g, const Drawing& d, VerifyReport& r) {
  if (g.edge_count() == 0) return;
  r.min_len = std::numeric_limits<double>::infinity();
  for (const Edge& e : g.edges()) {
    double l = d.length(e);
    r.min_len = std::min(r.min_len, l);
    r.max_len = std::max(r.max_len, l);
  }
  r.ratio = r.min_len > 0 ? r.max_len / r.min_len : std::numeric_limits<double>::infinity();
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::string pair_text(const Edge& a, const Edge& b) { return edge_text(a) + " and " + edge_text(b); }

// Vertex coincidences and vertices lying on non-incident edges.
void check_points(const Graph& g, const Drawing& d, VerifyReport& r) {
  int n = g.vertex_count();
  if (d.size() != n) {
    r.add({"size-mismatch", {}, {}, "drawing has " + std::to_string(d.size()) + " points for " +
                                        std::to_string(n) + " vertices"});
    return;
  }
  for (Vertex v = 0; v < n; ++v)
    if (!is_finite(d[v])) r.add({"non-finite", {v}, {}, "vertex " + std::to_string(v)});
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return d[a].x != d[b].x ? d[a].x < d[b].x : d[a].y < d[b].y;
  });
  for (int i = 1; i < n; ++i)
    if (d[order[i]] == d[order[i - 1]])
      r.add({"coincident-vertices", {order[i - 1], order[i]}, {d[order[i]]}, "two vertices share a point"});
}

void vertex_on_edge_scan(const Graph& g, const Drawing& d, Exec exec, VerifyReport& r) {
  const auto& edges = g.edges();
  int n = g.vertex_count();
  long m = static_cast<long>(edges.size());
  std::vector<Box> boxes(m);
  for (long i = 0; i < m; ++i) boxes[i] = box_of(d.segment(edges[i]));
  std::vector<std::vector<Violation>> found(n);
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::parallel)
  for (Vertex v = 0; v < n; ++v) {
    Point p = d[v];
    for (long i = 0; i < m; ++i) {
      const Edge& e = edges[i];
      if (e.u == v || e.v == v) continue;
      const Box& b = boxes[i];
      if (p.x < b.x0 || p.x > b.x1 || p.y < b.y0 || p.y > b.y1) continue;
      if (on_segment(p, d.segment(e)))
        found[v].push_back({"vertex-on-edge", {v, e.u, e.v}, {p}, "vertex " + std::to_string(v) +
                                                                     " lies on edge " + edge_text(e)});
    }
  }
  for (auto& list : found)
    for (auto& x : list) r.add(std::move(x));
}

void crossing_scan(const Graph& g, const Drawing& d, Exec exec, VerifyReport& r) {
  const auto& edges = g.edges();
  long m = static_cast<long>(edges.size());
  std::vector<Segment> segs(m);
  std::vector<Box> boxes(m);
  for (long i = 0; i < m; ++i) {
    segs[i] = d.segment(edges[i]);
    boxes[i] = box_of(segs[i]);
  }
  std::vector<std::vector<Violation>> found(m);
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::parallel)
  for (long i = 0; i < m; ++i) {
    for (long j = i + 1; j < m; ++j) {
      if (!boxes_meet(boxes[i], boxes[j])) continue;
      if (segments_conflict(segs[i], segs[j]))
        found[i].push_back({"edge-conflict",
                            {edges[i].u, edges[i].v, edges[j].u, edges[j].v},
                            {},
                            "edges " + pair_text(edges[i], edges[j]) + " meet outside a common endpoint"});
    }
  }
  for (auto& list : found)
    for (auto& x : list) r.add(std::move(x));
}

}  // namespace

double edge_length_ratio(const Graph& g, const Drawing& d) {
  if (g.edge_count() == 0) throw Error("no-edges", "ratio needs at least one edge");
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (const Edge& e : g.edges()) {
    double l = d.length(e);
    if (!(l > 0))
      throw Error("degenerate-edge", "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has length 0");
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  return hi / lo;
}

VerifyReport verify_proper(const Graph& g, const Drawing& d, Exec exec) {
  VerifyReport r;
  check_points(g, d, r);
  if (!r.ok) return r;
  vertex_on_edge_scan(g, d, exec, r);
  fill_lengths(g, d, r);
  return r;
}

VerifyReport verify_planar_straightline(const Graph& g, const Drawing& d, Exec exec) {
  VerifyReport r;
  check_points(g, d, r);
  if (!r.ok) return r;
  // A vertex with an incident edge that lies on another edge already shows
  // up as a conflict of two edges; isolated vertices need the point scan.
  bool isolated = false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) isolated |= g.degree(v) == 0;
  if (isolated) vertex_on_edge_scan(g, d, exec, r);
  crossing_scan(g, d, exec, r);
  fill_lengths(g, d, r);
  return r;
}

VerifyReport verify_embedding(const PlaneGraph& g, const Drawing& d) {
  VerifyReport r;
  int n = g.vertex_count();
  if (d.size() != n) {
    r.add({"size-mismatch", {}, {}, "drawing does not match the graph"});
    return r;
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto& rot = g.rotation(v);
    if (rot.size() < 3) continue;
    Point c = d[v];
    auto upper = [&](Point p) { return p.y > c.y || (p.y == c.y && p.x > c.x); };
    std::vector<Vertex> ccw(rot.begin(), rot.end());
    std::sort(ccw.begin(), ccw.end(), [&](Vertex a, Vertex b) {
      bool ua = upper(d[a]), ub = upper(d[b]);
      if (ua != ub) return ua;
      return orient(c, d[a], d[b]) > 0;
    });
    std::vector<Vertex> cw(ccw.rbegin(), ccw.rend());
    if (!same_cyclic_walk(cw, rot))
      r.add({"rotation-mismatch", {v}, {c}, "neighbors of " + std::to_string(v) + " are not drawn in rotation order"});
  }
  const auto& outer = g.outer_face();
  double area2 = 0;
  for (std::size_t i = 0; i < outer.size(); ++i) area2 += cross(d[outer[i]], d[outer[(i + 1) % outer.size()]]);
  if (!(area2 < 0)) r.add({"outer-face", outer, {}, "outer face walk is not clockwise"});
  std::vector<char> on_outer(n, 0);
  for (Vertex v : outer) on_outer[v] = 1;
  for (Vertex v = 0; v < n && r.ok; ++v) {
    if (on_outer[v]) continue;
    // winding number of the outer walk around d[v], exact orientation tests
    int wn = 0;
    Point p = d[v];
    for (std::size_t i = 0; i < outer.size(); ++i) {
      Point a = d[outer[i]], b = d[outer[(i + 1) % outer.size()]];
      if (a.y <= p.y) {
        if (b.y > p.y && orient(a, b, p) > 0) ++wn;
      } else if (b.y <= p.y && orient(a, b, p) < 0) {
        --wn;
      }
    }
    if (wn == 0) r.add({"outer-face", {v}, {p}, "vertex " + std::to_string(v) + " lies outside the outer face"});
  }
  return r;
}

PerimeterTrace nested_triangle_perimeters(const Plane3Tree& g, const Drawing& d, bool normalize, double gamma) {
  int n = g.vertex_count();
  if (n % 3 != 0) throw Error("not-nested-triangles", "vertex count is not a multiple of 3");
  int k = n / 3;
  Plane3Tree ref = gen_nested_triangles(k);
  auto sorted_edges = [](const Graph& h) {
    auto e = h.edges();
    std::sort(e.begin(), e.end());
    return e;
  };
  if (sorted_edges(ref.graph()) != sorted_edges(g.graph()))
    throw Error("not-nested-triangles", "graph differs from the nested-triangles graph with " +
                                            std::to_string(k) + " rings");
  if (d.size() != n) throw Error("not-nested-triangles", "drawing does not match the graph");
  PerimeterTrace tr;
  tr.gamma = gamma;
  Graph gg = g.graph();
  if (normalize) {
    double lo = std::numeric_limits<double>::infinity();
    for (const Edge& e : gg.edges()) lo = std::min(lo, d.length(e));
    tr.scale = 1.0 / lo;
  }
  auto rings = nested_triangle_rings(k);
  const Face3& out = rings.back();
  Triangle outer{{d[out[0]], d[out[1]], d[out[2]]}};
  if (orient(outer.v[0], outer.v[1], outer.v[2]) == 0) {
    tr.violations.push_back("outer ring is degenerate");
    return tr;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == out[0] || v == out[1] || v == out[2]) continue;
    if (!point_in_triangle(d[v], outer, true))
      tr.violations.push_back("vertex " + std::to_string(v) + " is not inside the outer ring");
  }
  for (const Face3& f : rings)
    tr.perimeters.push_back(tr.scale * perimeter(Triangle{{d[f[0]], d[f[1]], d[f[2]]}}));
  const double tol = 1e-9;
  if (tr.perimeters[0] < 3.0 * (1 - tol))
    tr.violations.push_back("innermost perimeter " + std::to_string(tr.perimeters[0]) + " below 3");
  for (int i = 1; i < k; ++i) {
    double gap = tr.perimeters[i] - tr.perimeters[i - 1];
    if (gap < gamma - tol * tr.perimeters[i])
      tr.violations.push_back("ring " + std::to_string(i + 1) + " grows by " + std::to_string(gap));
  }
  return tr;
}

VerifyReport check_decomposition(const TwoTree& g, const Decomposition& d) {
  VerifyReport r;
  int n = g.size();
  auto fail = [&](const std::string& kind, const std::string& text) { r.add({kind, {}, {}, text}); };
  const TwoTree& h = d.skeleton;
  if (!is_linear_2tree(h)) fail("skeleton-not-linear", "skeleton is not a linear 2-tree");
  if (static_cast<int>(d.skeleton_to_parent.size()) != h.size() || h.size() < 2 ||
      d.skeleton_to_parent[0] != 0 || d.skeleton_to_parent[1] != 1) {
    fail("skeleton-root", "skeleton is not rooted at the root edge");
    return r;
  }
  std::vector<int> owner(n, -1);  // -2: skeleton vertex, >= 0: component
  for (Vertex v : d.skeleton_to_parent) {
    if (v < 0 || v >= n || owner[v] != -1) {
      fail("skeleton-vertex", "bad or repeated skeleton vertex");
      return r;
    }
    owner[v] = -2;
  }
  std::vector<char> h_edge(g.edge_count(), 0);
  for (const Edge& e : h.graph().edges()) {
    auto id = g.edge_id(d.skeleton_to_parent[e.u], d.skeleton_to_parent[e.v]);
    if (!id) {
      fail("skeleton-edge", "skeleton edge missing from the 2-tree");
      return r;
    }
    h_edge[*id] = 1;
  }
  if (static_cast<int>(d.vertex_class.size()) != n) {
    fail("classes", "class table has wrong size");
    return r;
  }
  for (const Edge& e : h.graph().edges()) {
    int a = d.vertex_class[d.skeleton_to_parent[e.u]], b = d.vertex_class[d.skeleton_to_parent[e.v]];
    if (a == b || a < 1 || a > 3 || b < 1 || b > 3) fail("classes", "skeleton edge joins equal classes");
  }
  if (static_cast<int>(d.components.size()) != h.edge_count())
    fail("component-count", "expected one component per skeleton edge");
  std::vector<char> root_seen(g.edge_count(), 0);
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const Component& comp = d.components[c];
    auto rid = g.edge_id(comp.root.u, comp.root.v);
    if (!rid || !h_edge[*rid]) {
      fail("component-root", "component root (" + std::to_string(comp.root.u) + "," +
                                 std::to_string(comp.root.v) + ") is not a skeleton edge");
      continue;
    }
    if (root_seen[*rid]++) fail("component-root", "two components share a root");
    if (static_cast<int>(comp.to_parent.size()) != comp.tree.size() || comp.tree.size() < 2 ||
        Edge(comp.to_parent[0], comp.to_parent[1]) != comp.root) {
      fail("component-map", "component vertex map does not start at its root");
      continue;
    }
    for (const Edge& e : comp.tree.graph().edges())
      if (!g.graph().has_edge(comp.to_parent[e.u], comp.to_parent[e.v]))
        fail("component-edge", "component edge missing from the 2-tree");
    for (std::size_t i = 2; i < comp.to_parent.size(); ++i) {
      Vertex v = comp.to_parent[i];
      if (v < 0 || v >= n || owner[v] != -1)
        fail("partition", "vertex " + std::to_string(v) + " is shared between parts");
      else
        owner[v] = static_cast<int>(c);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] == -1) fail("partition", "vertex " + std::to_string(v) + " belongs to no part");

  if (n >= 4) {
    // The bound fails for the triangle (n = 2, x = y = 1), so it is only
    // asserted from four vertices on.
    ComponentBounds b = component_bounds(g, d);
    if (!component_bounds_hold(b))
      fail("size-bound", "n=" + std::to_string(b.n) + " x=" + std::to_string(b.x) + " y=" +
                             std::to_string(b.y) + " z=" + std::to_string(b.z));
  }

  if (!d.designated.empty()) {
    if (d.designated.front() != g.edge(0)) fail("designated", "chain does not start at the root");
    std::vector<char> is_designated(g.edge_count(), 0);
    for (std::size_t i = 0; i < d.designated.size(); ++i) {
      auto id = g.edge_id(d.designated[i].u, d.designated[i].v);
      if (!id || !h_edge[*id]) {
        fail("designated", "designated edge is not a skeleton edge");
        continue;
      }
      is_designated[*id] = 1;
      if (i > 0) {
        auto prev = g.edge_id(d.designated[i - 1].u, d.designated[i - 1].v);
        auto sides = prev ? g.side_edges(*prev) : std::vector<int>{};
        if (std::find(sides.begin(), sides.end(), *id) == sides.end())
          fail("designated", "designated edge is not a side edge of its predecessor");
      }
    }
    std::vector<char> side_of_designated(g.edge_count(), 0);
    for (int id = 0; id < g.edge_count(); ++id)
      if (is_designated[id])
        for (int s : g.side_edges(id)) side_of_designated[s] = 1;
    for (const Component& comp : d.components) {
      auto rid = g.edge_id(comp.root.u, comp.root.v);
      if (!rid || comp.bare()) continue;
      if (is_designated[*rid]) fail("designated-root", "a designated edge roots a nonempty component");
      if (!side_of_designated[*rid]) fail("root-placement", "component root is not a side edge of a designated edge");
    }
  }
  return r;
}

}  // namespace elr

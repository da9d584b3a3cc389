#include "elr/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "elr/error.hpp"

namespace elr {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("invalid-size", what);
}

// Grows k - 1 rings inside the face whose ring is (a, b, c).
void grow_rings(Plane3Tree& t, Face3 outer, int k, std::vector<Face3>* rings) {
  std::vector<Face3> local{outer};
  auto [a, b, c] = outer;
  for (int i = 1; i < k; ++i) {
    Vertex c2 = t.insert({a, b, c});
    Vertex b2 = t.insert({a, b, c2});
    Vertex a2 = t.insert({a, b2, c2});
    a = a2;
    b = b2;
    c = c2;
    local.push_back({a, b, c});
  }
  if (rings) rings->assign(local.rbegin(), local.rend());
}

}  // namespace

Plane3Tree gen_nested_triangles(int k) {
  require(k >= 1, "nested triangles need k >= 1");
  Plane3Tree t;
  grow_rings(t, {0, 1, 2}, k, nullptr);
  return t;
}

std::vector<Face3> nested_triangle_rings(int k) {
  require(k >= 1, "nested triangles need k >= 1");
  Plane3Tree t;
  std::vector<Face3> rings;
  grow_rings(t, {0, 1, 2}, k, &rings);
  return rings;
}

namespace {
Plane3Tree lower_bound_impl(int k, std::vector<std::vector<Face3>>* copies) {
  require(k >= 1, "lower-bound graph needs k >= 1");
  const Vertex a = 0, c = 1, d = 2;
  Plane3Tree t;
  Vertex b = t.insert({a, c, d});
  std::vector<Face3> r1, r2;
  grow_rings(t, {a, b, c}, k, &r1);
  grow_rings(t, {a, b, d}, k, &r2);
  if (copies) *copies = {r1, r2};
  return t;
}
}  // namespace

Plane3Tree gen_lower_bound_graph(int k) { return lower_bound_impl(k, nullptr); }

std::vector<std::vector<Face3>> lower_bound_copies(int k) {
  std::vector<std::vector<Face3>> out;
  lower_bound_impl(k, &out);
  return out;
}

Plane3Tree gen_balanced_3tree(int d, std::uint64_t seed) {
  require(d >= 1, "balanced 3-tree needs depth >= 1");
  std::mt19937_64 rng(seed);
  Plane3Tree t;
  std::vector<Face3> level{{0, 1, 2}};
  for (int depth = 1; depth < d; ++depth) {
    std::shuffle(level.begin(), level.end(), rng);
    std::vector<Face3> next;
    for (const Face3& f : level) {
      Vertex v = t.insert(f);
      next.push_back({f[0], f[1], v});
      next.push_back({f[1], f[2], v});
      next.push_back({f[2], f[0], v});
    }
    level = std::move(next);
  }
  return t;
}

TwoTree gen_random_2tree(int n, std::uint64_t seed) {
  require(n >= 2, "2-tree needs n >= 2");
  std::mt19937_64 rng(seed);
  TwoTree t;
  for (int i = 2; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, t.edge_count() - 1);
    Edge e = t.edge(pick(rng));
    t.add_vertex(e.u, e.v);
  }
  return t;
}

TwoTree gen_linear_2tree(const std::vector<int>& profile) {
  TwoTree t;
  Vertex u = 0, v = 1;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    require(profile[i] >= 1, "profile entries must be >= 1");
    Vertex last = -1;
    for (int j = 0; j < profile[i]; ++j) last = t.add_vertex(u, v);
    u = v;
    v = last;
  }
  return t;
}

namespace {

PlaneGraph four_cycle() {
  return PlaneGraph({{1, 3}, {2, 0}, {3, 1}, {0, 2}}, {0, 3, 2, 1});
}

SplitStep resolve(const PlaneGraph& g, const QuadOp& op) {
  const auto& s = op.site;
  auto fail = [&](const std::string& why) -> SplitStep { throw Error("invalid-op", why); };
  int n = g.vertex_count();
  for (Vertex x : s)
    if (x < 0 || x >= n) return fail("site names unknown vertex " + std::to_string(x));
  if (op.kind == QuadOp::Kind::P0) {
    if (s.size() != 4) return fail("P0 needs a face of four vertices");
    auto faces = g.faces();
    auto has = [&](const std::vector<Vertex>& w) {
      return std::any_of(faces.begin(), faces.end(), [&](const auto& f) { return same_cyclic_walk(f, w); });
    };
    if (has(s)) return {s[0], s[1], s[2]};
    if (has({s[0], s[3], s[2], s[1]})) return {s[0], s[3], s[2]};
    return fail("no face with walk " + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                std::to_string(s[2]) + "," + std::to_string(s[3]));
  }
  if (s.size() != 3) return fail("P1 needs a path of three vertices");
  if (s[0] == s[2] || !g.graph().has_edge(s[0], s[1]) || !g.graph().has_edge(s[1], s[2]))
    return fail("P1 site is not a path");
  return {s[0], s[1], s[2]};
}

}  // namespace

BipartitePlane gen_bipartite_maximal(const std::vector<QuadOp>& script) {
  BipartitePlane out{four_cycle(), {}, {}};
  for (const QuadOp& op : script) {
    SplitStep st = resolve(out.graph, op);
    out.graph.split_vertex(st.u, st.v, st.w);
    out.ops.push_back(op);
    out.steps.push_back(st);
  }
  return out;
}

BipartitePlane gen_bipartite_random(int ops, std::uint64_t seed) {
  require(ops >= 0, "operation count must be >= 0");
  std::mt19937_64 rng(seed);
  BipartitePlane out{four_cycle(), {}, {}};
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < ops; ++i) {
    QuadOp op;
    if (coin(rng)) {
      auto faces = out.graph.faces();
      auto f = faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)];
      if (coin(rng)) std::rotate(f.begin(), f.begin() + 1, f.end());
      op = {QuadOp::Kind::P0, f};
    } else {
      Vertex v = std::uniform_int_distribution<Vertex>(0, out.graph.vertex_count() - 1)(rng);
      auto nb = out.graph.rotation(v);
      std::shuffle(nb.begin(), nb.end(), rng);
      op = {QuadOp::Kind::P1, {nb[0], v, nb[1]}};
    }
    SplitStep st = resolve(out.graph, op);
    out.graph.split_vertex(st.u, st.v, st.w);
    out.ops.push_back(op);
    out.steps.push_back(st);
  }
  return out;
}

Graph gen_random_sparse(int n, std::uint64_t seed) {
  require(n >= 1, "graph needs n >= 1");
  std::mt19937_64 rng(seed);
  long target = std::min<long>(2L * n, static_cast<long>(n) * (n - 1) / 2);
  Graph g(n);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  while (g.edge_count() < target) {
    Vertex a = pick(rng), b = pick(rng);
    if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
  }
  return g;
}

}  // namespace elr

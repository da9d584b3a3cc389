#pragma once

#include <cstdint>
#include <vector>

#include "elr/plane3tree.hpp"
#include "elr/plane_graph.hpp"
#include "elr/two_tree.hpp"

namespace elr {

// Nested triangles: ring k is the outer triangle (0, 1, 2); ring i - 1 is
// inserted inside ring i as c, then b, then a.
Plane3Tree gen_nested_triangles(int k);
// Vertex ids (a_i, b_i, c_i) of every ring, innermost ring first.
std::vector<Face3> nested_triangle_rings(int k);

// Two nested-triangle graphs glued on K4.  Ids: a = 0, c = 1, d = 2, b = 3;
// the copies grow inside faces abc and abd.
Plane3Tree gen_lower_bound_graph(int k);
// Rings of the two copies, innermost first; the outermost ring of the first
// copy is (a, b, c) and of the second (a, b, d).
std::vector<std::vector<Face3>> lower_bound_copies(int k);

// Every face at depth < d receives a vertex; seed permutes the insertion
// order inside each level.
Plane3Tree gen_balanced_3tree(int d, std::uint64_t seed);

TwoTree gen_random_2tree(int n, std::uint64_t seed);
// profile[i] apexes on the i-th chain edge; the chain continues along the
// side edge between the chain edge's second endpoint and its last apex.
TwoTree gen_linear_2tree(const std::vector<int>& profile);

// One step building a maximal bipartite plane graph from the 4-cycle.
// P0: site is a face walk f0 f1 f2 f3 (either orientation), the new vertex
// is joined to f0 and f2 inside it.  P1: site is a path u v w; the new vertex
// is joined to u, w and takes over the neighbors of v strictly between u and
// w clockwise, starting at the face left of dart u -> v.
struct QuadOp {
  enum class Kind { P0, P1 };
  Kind kind = Kind::P0;
  std::vector<Vertex> site;
};

struct SplitStep {
  Vertex u, v, w;
};

struct BipartitePlane {
  PlaneGraph graph;
  std::vector<QuadOp> ops;
  // Vertex 4 + i was created by splitting steps[i].v along path u v w.
  std::vector<SplitStep> steps;
};

// Base 4-cycle 0 1 2 3 (counterclockwise).  Throws Error("invalid-op").
BipartitePlane gen_bipartite_maximal(const std::vector<QuadOp>& script);
BipartitePlane gen_bipartite_random(int ops, std::uint64_t seed);

// Uniform random simple graph with min(2n, n(n-1)/2) edges.
Graph gen_random_sparse(int n, std::uint64_t seed);

}  // namespace elr

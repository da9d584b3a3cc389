#pragma once

#include <vector>

#include "elr/graph.hpp"

namespace elr {

// Combinatorial embedding.  rotation(v) lists the neighbors of v in
// clockwise order.  Faces are reported as vertex walks traversed with the
// face on the left: the dart after (a -> b) is (b -> cw_next(b, a)).  In a
// drawing that respects the embedding, bounded faces therefore come out
// counterclockwise and the outer face clockwise.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  // Validates symmetry of the rotation, connectivity, genus 0 (Euler) and
  // that outer_face is one of the traced face walks (up to cyclic shift).
  // Throws Error("invariant-violation").
  PlaneGraph(std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> outer_face);

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return graph_.edge_count(); }
  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rot_; }
  const std::vector<Vertex>& outer_face() const { return outer_; }

  Vertex cw_next(Vertex v, Vertex w) const;
  Vertex cw_prev(Vertex v, Vertex w) const;

  // Walk of the face to the left of dart a -> b.
  std::vector<Vertex> face_left_of(Vertex a, Vertex b) const;
  std::vector<std::vector<Vertex>> faces() const;

  // Splits v: a new vertex x becomes adjacent to u, w and to every neighbor
  // of v strictly between u and w in clockwise order around v, counting from
  // the corner of the face left of dart u -> v; those neighbors lose their
  // edge to v.  Returns x.  Throws Error("invalid-op") if u or w is not a
  // neighbor of v or u == w.
  Vertex split_vertex(Vertex u, Vertex v, Vertex w);

 private:
  int index_of(Vertex v, Vertex w) const;
  void rebuild_graph();

  std::vector<std::vector<Vertex>> rot_;
  std::vector<Vertex> outer_;
  Graph graph_;
};

// True when walk b is a cyclic shift of walk a.
bool same_cyclic_walk(const std::vector<Vertex>& a, const std::vector<Vertex>& b);

}  // namespace elr

#include "elr/graph.hpp"

#include <string>

#include "elr/error.hpp"

namespace elr {

Graph::Graph(int n) : adj_(n) {}

Graph::Graph(int n, const std::vector<Edge>& edges) : adj_(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

bool Graph::has_edge(Vertex a, Vertex b) const { return keys_.contains(edge_key(a, b)); }

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  return vertex_count() - 1;
}

void Graph::add_edge(Vertex a, Vertex b) {
  int n = vertex_count();
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw Error("invariant-violation",
                "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  if (a == b) throw Error("invariant-violation", "loop at " + std::to_string(a));
  if (!keys_.insert(edge_key(a, b)).second)
    throw Error("invariant-violation",
                "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  edges_.emplace_back(a, b);
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

Graph Graph::edge_subgraph(const std::vector<Edge>& keep) const {
  Graph sub(vertex_count());
  for (const Edge& e : keep) {
    if (!has_edge(e.u, e.v))
      throw Error("invariant-violation",
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
    sub.add_edge(e.u, e.v);
  }
  return sub;
}

Drawing::Drawing(std::vector<Point> pts) : pts_(std::move(pts)) {
  for (std::size_t i = 0; i < pts_.size(); ++i)
    if (!is_finite(pts_[i]))
      throw Error("invariant-violation", "vertex " + std::to_string(i) + " has non-finite coordinates");
}

}  // namespace elr

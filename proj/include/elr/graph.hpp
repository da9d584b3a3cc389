#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "elr/geometry.hpp"

namespace elr {

using Vertex = int;

// Unordered pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::uint64_t edge_key(Vertex a, Vertex b) {
  Edge e(a, b);
  return (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
}

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws Error("invariant-violation") on loops, duplicates or bad ids.
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;

  Vertex add_vertex();
  void add_edge(Vertex a, Vertex b);

  // Subgraph on the same vertex set with the given edges (which must exist).
  Graph edge_subgraph(const std::vector<Edge>& keep) const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> keys_;
};

// Straight-line drawing: one finite point per vertex.
class Drawing {
 public:
  Drawing() = default;
  explicit Drawing(int n) : pts_(n) {}
  // Throws Error("invariant-violation") on non-finite coordinates.
  explicit Drawing(std::vector<Point> pts);

  int size() const { return static_cast<int>(pts_.size()); }
  Point operator[](Vertex v) const { return pts_[v]; }
  Point& operator[](Vertex v) { return pts_[v]; }
  const std::vector<Point>& points() const { return pts_; }
  void push_back(Point p) { pts_.push_back(p); }

  double length(const Edge& e) const { return dist(pts_[e.u], pts_[e.v]); }
  Segment segment(const Edge& e) const { return {pts_[e.u], pts_[e.v]}; }

 private:
  std::vector<Point> pts_;
};

}  // namespace elr

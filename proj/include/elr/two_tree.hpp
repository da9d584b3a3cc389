#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "elr/graph.hpp"

namespace elr {

// 2-tree given by its construction sequence: vertices 0 and 1 form the root
// edge, and vertex i >= 2 is attached to the (adjacent, earlier) pair
// parents(i).  Edge ids follow creation order: edge 0 is the root, vertex i
// creates edges 2i-3 = {p, i} and 2i-2 = {q, i}.
class TwoTree {
 public:
  TwoTree();  // the single root edge
  // Throws Error("order-violation") when a parent is not an earlier vertex
  // and Error("invalid-parents") when the two parents are not adjacent.
  explicit TwoTree(const std::vector<std::pair<Vertex, Vertex>>& parent_pairs);

  int size() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }
  const Graph& graph() const { return graph_; }
  // Parent pairs for vertices 2..size()-1, in order.
  const std::vector<std::pair<Vertex, Vertex>>& parent_pairs() const { return parents_; }
  std::pair<Vertex, Vertex> parents(Vertex v) const { return parents_[v - 2]; }

  Edge edge(int id) const { return edges_[id]; }
  std::optional<int> edge_id(Vertex a, Vertex b) const;
  int edge_id_of(Vertex a, Vertex b) const;  // throws if absent

  std::span<const Vertex> apexes(int edge_id) const { return apexes_[edge_id]; }
  bool is_trivial(int edge_id) const { return apexes_[edge_id].empty(); }
  // The two edges {u, x} and {v, x} for every apex x of edge uv.
  std::vector<int> side_edges(int edge_id) const;

  Vertex add_vertex(Vertex p, Vertex q);

 private:
  std::vector<std::pair<Vertex, Vertex>> parents_;
  Graph graph_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> edge_ids_;
  std::vector<std::vector<Vertex>> apexes_;
};

bool is_linear_2tree(const TwoTree& t);

// Class 1, 2 or 3 per vertex.  Throws Error("not-linear").
std::vector<int> classify_linear(const TwoTree& t);

enum class RootClass { k12, k13, k23 };

RootClass root_class_of(int class_a, int class_b);
const char* to_string(RootClass c);

// Piece of a 2-tree hanging off one skeleton edge.  tree is a fresh 2-tree
// whose root edge (0, 1) is the skeleton edge; to_parent maps its local ids
// back to the ids of the decomposed tree (to_parent[0], to_parent[1] are the
// root endpoints, in increasing class order).
struct Component {
  Edge root;
  RootClass root_class = RootClass::k12;
  TwoTree tree;
  std::vector<Vertex> to_parent;

  int vertex_count() const { return tree.size(); }
  bool bare() const { return tree.size() == 2; }
};

struct Decomposition {
  TwoTree skeleton;                  // local ids, root (0, 1) = parent root
  std::vector<Vertex> skeleton_to_parent;
  std::vector<int> vertex_class;     // per parent vertex, 0 when not in skeleton
  std::vector<Component> components;  // one per skeleton edge, skeleton edge order
  std::vector<Edge> designated;       // designated edge chain, parent ids
};

// Builds skeleton and components for the skeleton with the given edge set
// (parent ids).  Throws Error("invalid-skeleton") unless the edges form a
// sub-2-tree of g containing the root edge, built by a subsequence of g's
// construction, and Error("not-linear") when that sub-2-tree is not linear.
Decomposition h_components(const TwoTree& g, const std::vector<Edge>& skeleton_edges);

}  // namespace elr

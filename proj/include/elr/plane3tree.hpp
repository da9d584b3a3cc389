#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "elr/plane_graph.hpp"

namespace elr {

using Face3 = std::array<Vertex, 3>;

// Plane 3-tree grown from the triangle 0, 1, 2 (counterclockwise) by
// inserting vertex 3 + j into an internal face at step j.
class Plane3Tree {
 public:
  // Node of the representative tree: the face it stands for (counterclockwise)
  // and, for internal nodes, the vertex inserted there with the three faces
  // it creates as children, ordered (a, b, v), (b, c, v), (c, a, v).
  struct Node {
    Face3 face{};
    Vertex vertex = -1;
    std::array<int, 3> children{-1, -1, -1};
    bool leaf() const { return vertex < 0; }
  };

  Plane3Tree();
  // Each entry names an internal face by its three vertices in any order.
  // Throws Error("invalid-face").
  explicit Plane3Tree(const std::vector<Face3>& insertions);

  Vertex insert(const Face3& face);

  int vertex_count() const { return 3 + static_cast<int>(insertions_.size()); }
  // Faces as they were named, canonicalized to their counterclockwise order.
  const std::vector<Face3>& insertions() const { return insertions_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_[0]; }
  std::vector<Face3> internal_faces() const;

  Graph graph() const;
  PlaneGraph plane_graph() const;

 private:
  static std::uint64_t key(Face3 f);

  std::vector<Face3> insertions_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, int> leaf_of_;
};

// Largest number of nodes on a root-to-leaf path of the representative tree.
int rep_tree_depth(const Plane3Tree& t);

}  // namespace elr

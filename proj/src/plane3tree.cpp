#include "elr/plane3tree.hpp"

#include <algorithm>
#include <string>

#include "elr/error.hpp"

namespace elr {

std::uint64_t Plane3Tree::key(Face3 f) {
  std::sort(f.begin(), f.end());
  return (static_cast<std::uint64_t>(f[0]) << 42) | (static_cast<std::uint64_t>(f[1]) << 21) |
         static_cast<std::uint64_t>(f[2]);
}

Plane3Tree::Plane3Tree() {
  nodes_.push_back(Node{{0, 1, 2}});
  leaf_of_.emplace(key({0, 1, 2}), 0);
}

Plane3Tree::Plane3Tree(const std::vector<Face3>& insertions) : Plane3Tree() {
  for (const Face3& f : insertions) insert(f);
}

Vertex Plane3Tree::insert(const Face3& face) {
  auto it = leaf_of_.find(key(face));
  bool in_range = std::all_of(face.begin(), face.end(), [&](Vertex v) { return v >= 0 && v < vertex_count(); });
  if (!in_range || it == leaf_of_.end())
    throw Error("invalid-face", "(" + std::to_string(face[0]) + "," + std::to_string(face[1]) + "," +
                                    std::to_string(face[2]) + ") is not an internal face");
  int id = it->second;
  leaf_of_.erase(it);
  Vertex v = vertex_count();
  Face3 f = nodes_[id].face;
  insertions_.push_back(f);
  nodes_[id].vertex = v;
  Face3 kids[3] = {{f[0], f[1], v}, {f[1], f[2], v}, {f[2], f[0], v}};
  for (int i = 0; i < 3; ++i) {
    int c = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{kids[i]});
    nodes_[id].children[i] = c;
    leaf_of_.emplace(key(kids[i]), c);
  }
  return v;
}

std::vector<Face3> Plane3Tree::internal_faces() const {
  std::vector<Face3> out;
  for (const Node& nd : nodes_)
    if (nd.leaf()) out.push_back(nd.face);
  return out;
}

Graph Plane3Tree::graph() const {
  Graph g(vertex_count());
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  for (std::size_t j = 0; j < insertions_.size(); ++j)
    for (Vertex a : insertions_[j]) g.add_edge(a, static_cast<Vertex>(3 + j));
  return g;
}

PlaneGraph Plane3Tree::plane_graph() const {
  int n = vertex_count();
  // cw_next relations from every face walked with the face on the left:
  // bounded faces counterclockwise, the outer face as 0, 2, 1.
  std::vector<std::unordered_map<Vertex, Vertex>> next(n);
  auto walk = [&](const Face3& f) {
    for (int i = 0; i < 3; ++i) next[f[(i + 1) % 3]][f[i]] = f[(i + 2) % 3];
  };
  for (const Face3& f : internal_faces()) walk(f);
  walk({0, 2, 1});
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex start = n;
    for (const auto& [w, unused] : next[v]) start = std::min(start, w);
    Vertex w = start;
    do {
      rot[v].push_back(w);
      w = next[v].at(w);
    } while (w != start);
  }
  return PlaneGraph(std::move(rot), {0, 2, 1});
}

int rep_tree_depth(const Plane3Tree& t) {
  const auto& nodes = t.nodes();
  int best = 0;
  std::vector<std::pair<int, int>> stack{{0, 1}};
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (!nodes[id].leaf())
      for (int c : nodes[id].children) stack.emplace_back(c, d + 1);
  }
  return best;
}

}  // namespace elr

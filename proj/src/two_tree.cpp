#include "elr/two_tree.hpp"

#include <algorithm>
#include <string>

#include "elr/error.hpp"

namespace elr {

TwoTree::TwoTree() : graph_(2) {
  graph_.add_edge(0, 1);
  edges_.emplace_back(0, 1);
  edge_ids_.emplace(edge_key(0, 1), 0);
  apexes_.emplace_back();
}

TwoTree::TwoTree(const std::vector<std::pair<Vertex, Vertex>>& parent_pairs) : TwoTree() {
  for (auto [p, q] : parent_pairs) add_vertex(p, q);
}

std::optional<int> TwoTree::edge_id(Vertex a, Vertex b) const {
  auto it = edge_ids_.find(edge_key(a, b));
  if (it == edge_ids_.end()) return std::nullopt;
  return it->second;
}

int TwoTree::edge_id_of(Vertex a, Vertex b) const {
  auto id = edge_id(a, b);
  if (!id)
    throw Error("invalid-parents", "no edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return *id;
}

std::vector<int> TwoTree::side_edges(int id) const {
  std::vector<int> out;
  Edge e = edges_[id];
  for (Vertex x : apexes_[id]) {
    out.push_back(*edge_id(e.u, x));
    out.push_back(*edge_id(e.v, x));
  }
  return out;
}

Vertex TwoTree::add_vertex(Vertex p, Vertex q) {
  Vertex v = size();
  if (p < 0 || q < 0 || p >= v || q >= v)
    throw Error("order-violation", "vertex " + std::to_string(v) + " names parents (" +
                                       std::to_string(p) + "," + std::to_string(q) + ")");
  auto id = p == q ? std::nullopt : edge_id(p, q);
  if (!id)
    throw Error("invalid-parents", "parents (" + std::to_string(p) + "," + std::to_string(q) +
                                       ") of vertex " + std::to_string(v) + " are not adjacent");
  parents_.emplace_back(p, q);
  graph_.add_vertex();
  apexes_[*id].push_back(v);
  for (Vertex w : {p, q}) {
    graph_.add_edge(w, v);
    edge_ids_.emplace(edge_key(w, v), static_cast<int>(edges_.size()));
    edges_.emplace_back(w, v);
    apexes_.emplace_back();
  }
  return v;
}

bool is_linear_2tree(const TwoTree& t) {
  for (int id = 0; id < t.edge_count(); ++id) {
    int nontrivial = 0;
    for (int s : t.side_edges(id))
      if (!t.is_trivial(s)) ++nontrivial;
    if (nontrivial > 1) return false;
  }
  return true;
}

std::vector<int> classify_linear(const TwoTree& t) {
  if (!is_linear_2tree(t)) throw Error("not-linear", "2-tree is not linear");
  std::vector<int> cls(t.size());
  cls[0] = 1;
  cls[1] = 2;
  for (Vertex v = 2; v < t.size(); ++v) {
    auto [p, q] = t.parents(v);
    cls[v] = 6 - cls[p] - cls[q];
  }
  return cls;
}

RootClass root_class_of(int a, int b) {
  int lo = std::min(a, b), hi = std::max(a, b);
  if (lo == 1 && hi == 2) return RootClass::k12;
  if (lo == 1 && hi == 3) return RootClass::k13;
  if (lo == 2 && hi == 3) return RootClass::k23;
  throw Error("invariant-violation", "edge endpoints share class " + std::to_string(a));
}

const char* to_string(RootClass c) {
  switch (c) {
    case RootClass::k12: return "1-2";
    case RootClass::k13: return "1-3";
    case RootClass::k23: return "2-3";
  }
  return "?";
}

Decomposition h_components(const TwoTree& g, const std::vector<Edge>& skeleton_edges) {
  int n = g.size();
  std::vector<char> in_h(n, 0);
  std::vector<char> edge_in_h(g.edge_count(), 0);
  for (const Edge& e : skeleton_edges) {
    auto id = g.edge_id(e.u, e.v);
    if (!id || e.u < 0 || e.v >= n)
      throw Error("invalid-skeleton", "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                          ") is not an edge of the 2-tree");
    if (edge_in_h[*id]) throw Error("invalid-skeleton", "duplicate skeleton edge");
    edge_in_h[*id] = 1;
    in_h[e.u] = in_h[e.v] = 1;
  }
  if (!edge_in_h[0]) throw Error("invalid-skeleton", "skeleton misses the root edge");

  Decomposition d;
  std::vector<int> local(n, -1);
  local[0] = 0;
  local[1] = 1;
  d.skeleton_to_parent = {0, 1};
  std::vector<std::pair<Vertex, Vertex>> hp;
  for (Vertex v = 2; v < n; ++v) {
    if (!in_h[v]) continue;
    auto [p, q] = g.parents(v);
    if (!in_h[p] || !in_h[q] || !edge_in_h[g.edge_id_of(p, v)] || !edge_in_h[g.edge_id_of(q, v)])
      throw Error("invalid-skeleton", "skeleton vertex " + std::to_string(v) +
                                          " is not attached to a skeleton edge");
    local[v] = static_cast<int>(d.skeleton_to_parent.size());
    d.skeleton_to_parent.push_back(v);
    hp.emplace_back(local[p], local[q]);
  }
  d.skeleton = TwoTree(hp);
  if (d.skeleton.edge_count() != static_cast<int>(skeleton_edges.size()))
    throw Error("invalid-skeleton", "skeleton edges are not the induced sub-2-tree");
  std::vector<int> hcls = classify_linear(d.skeleton);
  d.vertex_class.assign(n, 0);
  for (int i = 0; i < d.skeleton.size(); ++i) d.vertex_class[d.skeleton_to_parent[i]] = hcls[i];

  // Every vertex outside the skeleton hangs off the skeleton edge reached by
  // following parents until both lie in the skeleton.
  std::vector<int> owner(n, -1);  // skeleton edge id (local) per non-skeleton vertex
  std::vector<std::vector<Vertex>> members(d.skeleton.edge_count());
  for (Vertex v = 2; v < n; ++v) {
    if (in_h[v]) continue;
    auto [p, q] = g.parents(v);
    if (in_h[p] && in_h[q]) {
      owner[v] = d.skeleton.edge_id_of(local[p], local[q]);
    } else {
      owner[v] = in_h[p] ? owner[q] : owner[p];
    }
    members[owner[v]].push_back(v);
  }

  std::vector<int> comp_local(n, -1);
  d.components.reserve(d.skeleton.edge_count());
  for (int id = 0; id < d.skeleton.edge_count(); ++id) {
    Edge le = d.skeleton.edge(id);
    Vertex a = d.skeleton_to_parent[le.u], b = d.skeleton_to_parent[le.v];
    if (d.vertex_class[a] > d.vertex_class[b]) std::swap(a, b);
    Component c;
    c.root = Edge(a, b);
    c.root_class = root_class_of(d.vertex_class[a], d.vertex_class[b]);
    c.to_parent = {a, b};
    comp_local[a] = 0;
    comp_local[b] = 1;
    std::vector<std::pair<Vertex, Vertex>> cp;
    cp.reserve(members[id].size());
    for (Vertex v : members[id]) {
      auto [p, q] = g.parents(v);
      comp_local[v] = static_cast<int>(c.to_parent.size());
      c.to_parent.push_back(v);
      cp.emplace_back(comp_local[p], comp_local[q]);
    }
    c.tree = TwoTree(cp);
    for (Vertex v : c.to_parent) comp_local[v] = -1;
    d.components.push_back(std::move(c));
  }
  return d;
}

}  // namespace elr

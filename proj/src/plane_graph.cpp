#include "elr/plane_graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "elr/error.hpp"

namespace elr {
namespace {

std::uint64_t dart_key(Vertex a, Vertex b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

bool same_cyclic_walk(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> outer_face)
    : rot_(std::move(rotation)), outer_(std::move(outer_face)) {
  int n = vertex_count();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : rot_[v]) {
      if (w < 0 || w >= n || w == v)
        throw Error("invariant-violation", "rotation of " + std::to_string(v) + " names bad vertex");
      const auto& back = rot_[w];
      if (std::count(back.begin(), back.end(), v) != 1 ||
          std::count(rot_[v].begin(), rot_[v].end(), w) != 1)
        throw Error("invariant-violation", "rotation not symmetric at edge " + std::to_string(v) +
                                               "-" + std::to_string(w));
    }
  rebuild_graph();

  // connectivity
  if (n > 0) {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : rot_[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    if (count != n) throw Error("invariant-violation", "embedded graph is not connected");
  }
  auto fs = faces();
  long euler = static_cast<long>(n) - edge_count() + static_cast<long>(fs.size());
  if (n > 1 && euler != 2) throw Error("invariant-violation", "rotation system is not planar");
  if (n >= 3 && edge_count() > 3 * n - 6) throw Error("invariant-violation", "too many edges");
  if (n > 1) {
    bool found = std::any_of(fs.begin(), fs.end(), [&](const auto& f) { return same_cyclic_walk(f, outer_); });
    if (!found) throw Error("invariant-violation", "outer face is not a face of the embedding");
  }
}

void PlaneGraph::rebuild_graph() {
  graph_ = Graph(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v)
    for (Vertex w : rot_[v])
      if (v < w) graph_.add_edge(v, w);
}

int PlaneGraph::index_of(Vertex v, Vertex w) const {
  const auto& r = rot_[v];
  auto it = std::find(r.begin(), r.end(), w);
  if (it == r.end())
    throw Error("invalid-op", std::to_string(w) + " is not a neighbor of " + std::to_string(v));
  return static_cast<int>(it - r.begin());
}

Vertex PlaneGraph::cw_next(Vertex v, Vertex w) const {
  const auto& r = rot_[v];
  return r[(index_of(v, w) + 1) % r.size()];
}

Vertex PlaneGraph::cw_prev(Vertex v, Vertex w) const {
  const auto& r = rot_[v];
  return r[(index_of(v, w) + r.size() - 1) % r.size()];
}

std::vector<Vertex> PlaneGraph::face_left_of(Vertex a, Vertex b) const {
  std::vector<Vertex> walk;
  Vertex x = a, y = b;
  do {
    walk.push_back(x);
    Vertex z = cw_next(y, x);
    x = y;
    y = z;
  } while (!(x == a && y == b));
  return walk;
}

std::vector<std::vector<Vertex>> PlaneGraph::faces() const {
  std::vector<std::vector<Vertex>> out;
  std::unordered_set<std::uint64_t> used;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    const auto& r = rot_[v];
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (used.contains(dart_key(v, r[i]))) continue;
      Vertex x = v, y = r[i];
      std::vector<Vertex> walk;
      while (used.insert(dart_key(x, y)).second) {
        walk.push_back(x);
        Vertex z = rot_[y][(index_of(y, x) + 1) % rot_[y].size()];
        x = y;
        y = z;
      }
      out.push_back(std::move(walk));
    }
  }
  return out;
}

Vertex PlaneGraph::split_vertex(Vertex u, Vertex v, Vertex w) {
  int n = vertex_count();
  auto bad = [&](Vertex t) { return t < 0 || t >= n; };
  if (bad(u) || bad(v) || bad(w) || u == w)
    throw Error("invalid-op", "split needs two distinct neighbors of the split vertex");
  int iu = index_of(v, u);
  int iw = index_of(v, w);
  const auto& r = rot_[v];
  int deg = static_cast<int>(r.size());

  std::vector<Vertex> moved;
  for (int i = (iu + 1) % deg; i != iw; i = (i + 1) % deg) moved.push_back(r[i]);

  // Remember a dart of the outer face that does not touch v; its left face
  // after the split is the new outer face.
  std::pair<Vertex, Vertex> outer_dart{-1, -1};
  for (std::size_t i = 0; i < outer_.size(); ++i) {
    Vertex a = outer_[i], b = outer_[(i + 1) % outer_.size()];
    if (a != v && b != v) {
      outer_dart = {a, b};
      break;
    }
  }

  Vertex x = n;
  std::vector<Vertex> rx{u};
  rx.insert(rx.end(), moved.begin(), moved.end());
  rx.push_back(w);

  std::vector<Vertex> rv;
  for (int i = iw; i != iu; i = (i + 1) % deg) rv.push_back(r[i]);
  rv.push_back(u);
  rot_[v] = std::move(rv);

  for (Vertex b : moved) std::replace(rot_[b].begin(), rot_[b].end(), v, x);
  {
    auto& ru = rot_[u];
    ru.insert(ru.begin() + index_of(u, v), x);
  }
  {
    auto& rw = rot_[w];
    rw.insert(rw.begin() + index_of(w, v) + 1, x);
  }
  rot_.push_back(std::move(rx));
  rebuild_graph();
  if (outer_dart.first >= 0) outer_ = face_left_of(outer_dart.first, outer_dart.second);
  return x;
}

}  // namespace elr

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "elr/drawers.hpp"
#include "elr/error.hpp"
#include "elr/metrics.hpp"

namespace elr {

std::vector<int> greedy_coloring(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  int maxdeg = 0;
  for (Vertex v = 0; v < n; ++v) maxdeg = std::max(maxdeg, deg[v] = g.degree(v));
  std::vector<std::vector<Vertex>> bucket(maxdeg + 1);
  for (Vertex v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  int low = 0;
  while (static_cast<int>(order.size()) < n) {
    low = std::max(0, low - 1);
    while (true) {
      auto& b = bucket[low];
      while (!b.empty() && (removed[b.back()] || deg[b.back()] != low)) b.pop_back();
      if (!b.empty()) break;
      ++low;
    }
    Vertex v = bucket[low].back();
    bucket[low].pop_back();
    removed[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!removed[w]) bucket[--deg[w]].push_back(w);
  }
  std::vector<int> color(n, -1);
  std::vector<char> taken;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    taken.assign(g.degree(*it) + 1, 0);
    for (Vertex w : g.neighbors(*it))
      if (color[w] >= 0 && color[w] < static_cast<int>(taken.size())) taken[color[w]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    color[*it] = c;
  }
  return color;
}

int color_count(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return colors[e.u] == colors[e.v]; });
}

DrawReport draw_by_coloring(const Graph& g, double epsilon, std::uint64_t seed) {
  if (!(epsilon > 0 && epsilon < 1)) throw Error("invalid-epsilon", "epsilon must lie in (0, 1)");
  int n = g.vertex_count();
  std::vector<int> color = greedy_coloring(g);
  int k = std::max(1, color_count(color));
  int grid = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(k))));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> turn(0.0, 2 * std::numbers::pi);

  std::vector<std::vector<Vertex>> members(k);
  for (Vertex v = 0; v < n; ++v) members[color[v]].push_back(v);
  std::vector<double> angle(n);
  const double radius = epsilon / 6;
  for (int c = 0; c < k; ++c) {
    double offset = turn(rng);
    int m = static_cast<int>(members[c].size());
    for (int j = 0; j < m; ++j) angle[members[c][j]] = 2 * std::numbers::pi * j / m + offset;
  }
  auto place = [&](Vertex v) {
    int c = color[v];
    return Point{c % grid + radius * std::cos(angle[v]), static_cast<double>(c / grid) + radius * std::sin(angle[v])};
  };
  Drawing d(n);
  for (Vertex v = 0; v < n; ++v) d[v] = place(v);

  // No three points collinear: nudge the latest vertex of a bad triple.
  std::uniform_real_distribution<double> nudge(1e-4, 1e-3);
  for (int round = 0;; ++round) {
    if (round > 1000) throw Error("precision-exhausted", "could not break collinear triples");
    bool clean = true;
    for (Vertex a = 0; a < n && clean; ++a)
      for (Vertex b = a + 1; b < n && clean; ++b)
        for (Vertex c = b + 1; c < n && clean; ++c)
          if (orient(d[a], d[b], d[c]) == 0) {
            angle[c] += nudge(rng);
            d[c] = place(c);
            clean = false;
          }
    if (clean) break;
  }
  double bound = (std::sqrt(2.0 * k) + 2 * epsilon / 3) / (1 - 2 * epsilon / 3);
  return make_report(g, std::move(d), bound);
}

GridColoring color_from_drawing(const Graph& g, const Drawing& d, double epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw Error("invalid-epsilon", "epsilon must be positive");
  VerifyReport pr = verify_proper(g, d, Exec::serial);
  if (!pr.ok) throw Error("improper-input", "drawing is not proper: " + pr.violations.front().detail);
  double scale = 1.0, h = 1.0;
  if (g.edge_count() > 0) {
    if (!(pr.min_len > 0)) throw Error("improper-input", "edge of length 0");
    scale = 1.0 / pr.min_len;
    h = pr.max_len / pr.min_len;
  }
  GridColoring out;
  double eps = epsilon;
  double side = h + 1 + eps;
  while (std::abs(std::sqrt(2.0) * side - std::round(std::sqrt(2.0) * side)) < 1e-9) {
    eps *= 1.01;
    side = h + 1 + eps;
  }
  int cols = static_cast<int>(std::ceil(std::sqrt(2.0) * side));
  double small = side / cols;
  out.side = side;
  out.columns = cols;
  out.epsilon = eps;
  out.colors.resize(g.vertex_count());
  auto cell = [&](double coord) {
    double s = coord * scale;
    double in = s - side * std::floor(s / side);
    return std::clamp(static_cast<int>(std::floor(in / small)), 0, cols - 1);
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.colors[v] = cell(d[v].y) * cols + cell(d[v].x);
  return out;
}

}  // namespace elr

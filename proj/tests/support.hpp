#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of them call into the library routine they are used to check.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "elr/drawers.hpp"
#include "elr/error.hpp"
#include "elr/generators.hpp"
#include "elr/geometry.hpp"
#include "elr/plane3tree.hpp"
#include "elr/two_tree.hpp"

namespace oracle {

// Code of the elr::Error thrown by f, or "" when it returns normally.
template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const elr::Error& e) {
    return e.code();
  }
  return "";
}

using boost::multiprecision::cpp_rational;
using Big = boost::multiprecision::cpp_bin_float_50;

// Sign of the orientation determinant in exact rationals (every finite
// double converts exactly).
inline int orient_rational(elr::Point p, elr::Point q, elr::Point r) {
  cpp_rational px(p.x), py(p.y), qx(q.x), qy(q.y), rx(r.x), ry(r.y);
  cpp_rational det = (qx - px) * (ry - py) - (qy - py) * (rx - px);
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

// Depth of the representative tree from the insertion list alone: faces
// carry their level, an insertion into a level-L face creates three level
// L+1 faces, and the depth is the deepest level among the final faces.
inline int brute_depth(const std::vector<elr::Face3>& insertions) {
  auto key = [](elr::Vertex a, elr::Vertex b, elr::Vertex c) {
    std::array<int, 3> k{a, b, c};
    std::sort(k.begin(), k.end());
    return k;
  };
  std::map<std::array<int, 3>, int> level{{key(0, 1, 2), 1}};
  int next = 3;
  for (const auto& f : insertions) {
    auto it = level.find(key(f[0], f[1], f[2]));
    if (it == level.end()) return -1;
    int l = it->second;
    level.erase(it);
    level[key(f[0], f[1], next)] = l + 1;
    level[key(f[1], f[2], next)] = l + 1;
    level[key(f[2], f[0], next)] = l + 1;
    ++next;
  }
  int best = 0;
  for (auto& [k, l] : level) best = std::max(best, l);
  return best;
}

// n^(log2 phi) with 50 significant digits.
inline Big f_big(long n) {
  Big phi = (1 + boost::multiprecision::sqrt(Big(5))) / 2;
  return boost::multiprecision::pow(Big(n), boost::multiprecision::log2(phi));
}

// Size split allowed for the two side-class components, in integers.
inline bool split_admissible(long x, long y, long n) {
  return (2 * x <= n && 2 * y <= n - x) || (2 * y <= n && 2 * x <= n - y);
}

struct Bounds {
  long n = 0, x = 0, y = 0, z = 0;
};

// Largest component per root class, sizes minus one, straight from the
// decomposition's component list.
inline Bounds bounds_from_components(const elr::TwoTree& g, const elr::Decomposition& d) {
  Bounds b;
  b.n = g.size() - 1;
  for (const auto& c : d.components) {
    long s = c.vertex_count() - 1;
    switch (c.root_class) {
      case elr::RootClass::k13: b.x = std::max(b.x, s); break;
      case elr::RootClass::k23: b.y = std::max(b.y, s); break;
      case elr::RootClass::k12: b.z = std::max(b.z, s); break;
    }
  }
  return b;
}

inline bool bounds_hold(const Bounds& b) { return 2 * b.z <= b.n && split_admissible(b.x, b.y, b.n); }

// Classes 1, 2, 3 of a linear 2-tree recomputed by walking the construction:
// the root gets classes 1 and 2 and every apex takes the class missing from
// its parent edge.
inline std::vector<int> classes_by_coloring(const elr::TwoTree& t) {
  std::vector<int> c(t.size(), 0);
  c[0] = 1;
  c[1] = 2;
  for (int v = 2; v < t.size(); ++v) {
    auto [p, q] = t.parents(v);
    c[v] = 6 - c[p] - c[q];
  }
  return c;
}

struct LCheck {
  bool l1 = true, l2 = true, l3 = true;
};

// Properties of an L2T drawing: vertices 0, 1 exactly on a1, a2; all other
// vertices strictly inside the frame (exact orientation); every edge longer
// than the threshold of its class pair.
inline LCheck check_l_properties(const elr::TwoTree& h, const elr::Drawing& d, const elr::L2TParams& p) {
  LCheck r;
  r.l1 = d[0] == p.frame.v[0] && d[1] == p.frame.v[1];
  const auto& f = p.frame.v;
  int turn = orient_rational(f[0], f[1], f[2]);
  for (int v = 2; v < h.size(); ++v) {
    for (int i = 0; i < 3; ++i)
      if (orient_rational(f[i], f[(i + 1) % 3], d[v]) != turn) r.l2 = false;
  }
  auto cls = classes_by_coloring(h);
  for (const auto& e : h.graph().edges()) {
    int a = std::min(cls[e.u], cls[e.v]), b = std::max(cls[e.u], cls[e.v]);
    double need = a == 1 && b == 2 ? p.l12 : a == 1 ? p.l13 : p.l23;
    if (!(d.length(e) > need)) r.l3 = false;
  }
  return r;
}

// Frame with a1a2 as its longest side, and thresholds with
// l13 + l23 <= |a1a2|, l12 < |a1a2|, all >= 1.
inline elr::L2TParams random_admissible_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double len = 2.0 + 30.0 * U(rng);
  double ang = 2 * M_PI * U(rng);
  elr::Point a1{20 * U(rng) - 10, 20 * U(rng) - 10};
  elr::Point dir{std::cos(ang), std::sin(ang)}, up{-dir.y, dir.x};
  elr::Point a2 = a1 + len * dir;
  double t = 0.1 + 0.8 * U(rng);
  double h = len * (0.05 + 0.6 * U(rng)) * std::min(t, 1 - t);
  elr::Point a3 = a1 + (t * len) * dir + h * up;
  elr::L2TParams p;
  p.frame = {{a1, a2, a3}};
  double share = 0.1 + 0.8 * U(rng);
  double room = len - 2.0;
  p.l13 = 1.0 + share * room * U(rng);
  p.l23 = 1.0 + (1 - share) * room * U(rng);
  p.l12 = 1.0 + (len - 1.0) * 0.999 * U(rng);
  return p;
}

// Random profile of a linear 2-tree with n vertices.
inline std::vector<int> random_profile(int n, std::mt19937_64& rng) {
  std::vector<int> p;
  int left = n - 2;
  while (left > 0) {
    int take = std::uniform_int_distribution<int>(1, std::min(left, 5))(rng);
    p.push_back(take);
    left -= take;
  }
  return p;
}

}  // namespace oracle

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "elr/drawers.hpp"
#include "elr/error.hpp"
#include "l2t_layout.hpp"

namespace elr {

Drawing l2t_draw(const TwoTree& h, const L2TParams& p) {
  const Triangle& t = p.frame;
  for (Point v : t.v)
    if (!is_finite(v)) throw Error("frame-too-small", "frame has non-finite corners");
  if (orient(t.v[0], t.v[1], t.v[2]) == 0) throw Error("frame-too-small", "frame is degenerate");
  if (!(p.l12 > 0 && p.l13 > 0 && p.l23 > 0))
    throw Error("frame-too-small", "minimum lengths must be positive");
  double len = dist(t.v[0], t.v[1]);
  if (!(p.l13 + p.l23 <= len) || !(p.l12 < len))
    throw Error("frame-too-small", "minimum lengths do not fit on the base of the frame");
  std::vector<int> cls = classify_linear(h);
  return Drawing(detail::l2t_layout(h, cls, t, p.l12, p.l13, p.l23).pos);
}

namespace {

using detail::LocalFrame;

struct Piece {
  TwoTree tree;
  std::vector<Vertex> to_global;
  Decomposition dec;
  std::vector<int> child;  // per component: piece index, -1 when bare
  double req = 1.0;
  int height = 0;
  Triangle frame;
};

// Largest apex height of a triangle on base u v (apex above local x = xw on
// side `side`) that keeps every obstacle segment out of its interior.
class FrameFitter {
 public:
  FrameFitter(Point u, Point v, int side) : u_(u), v_(v) {
    Point d = v - u;
    len_ = norm(d);
    ex_ = (1.0 / len_) * d;
    ey_ = Point{-ex_.y, ex_.x};
    if (side < 0) ey_ = -1.0 * ey_;
  }

  double len() const { return len_; }
  Point ey() const { return ey_; }

  Point local(Point p) const {
    if (p == u_) return {0, 0};
    if (p == v_) return {len_, 0};
    Point r = p - u_;
    return {dot(r, ex_), dot(r, ey_)};
  }

  // min over the segment of y / tent(x), tent peaking at xw with value 1.
  double bound(const Segment& s, double xw) const {
    Point p = local(s.a), q = local(s.b);
    bool pu = s.a == u_ || s.a == v_, qu = s.b == u_ || s.b == v_;
    if (pu && qu) return kInf;
    // Orient so that a base corner, if any, is p.
    if (qu) std::swap(p, q);
    double t0 = 0, t1 = 1;
    Point d = q - p;
    if (!clip(-d.y, p.y, t0, t1) || !clip(-d.x, p.x, t0, t1) || !clip(d.x, len_ - p.x, t0, t1))
      return kInf;
    Point c0 = p + t0 * d, c1 = p + t1 * d;
    if (pu || qu) {
      if (t0 > 0) return piecewise(c0, c1, xw);
      if (!(t1 > 0) || d.y <= 0) return kInf;  // touches the base only at the corner
      // segment leaves a base corner: the ratio is constant near it
      bool at_u = c0.x == 0;
      if (at_u) {
        if (d.x <= 0) return kInf;
        double near = d.y / d.x * xw;
        if (c1.x <= xw) return near;
        Point mid = p + ((xw - p.x) / d.x) * d;
        return std::min(near, span(mid, c1, xw));
      }
      if (d.x >= 0) return kInf;
      double near = d.y / -d.x * (len_ - xw);
      if (c1.x >= xw) return near;
      Point mid = p + ((xw - p.x) / d.x) * d;
      return std::min(near, span(mid, c1, xw));
    }
    return piecewise(c0, c1, xw);
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  // Liang-Barsky step for the constraint num_dir * t <= rhs form: p*t <= q.
  static bool clip(double p, double q, double& t0, double& t1) {
    if (p == 0) return q >= 0;
    double r = q / p;
    if (p < 0) {
      if (r > t1) return false;
      t0 = std::max(t0, r);
    } else {
      if (r < t0) return false;
      t1 = std::min(t1, r);
    }
    return t0 <= t1;
  }

  double value(Point p, double xw) const {
    double tent = p.x <= xw ? p.x / xw : (len_ - p.x) / (len_ - xw);
    if (tent <= 0) return p.y > 0 ? kInf : 0.0;
    return std::max(p.y, 0.0) / tent;
  }

  double span(Point a, Point b, double xw) const { return std::min(value(a, xw), value(b, xw)); }

  double piecewise(Point a, Point b, double xw) const {
    if ((a.x - xw) * (b.x - xw) < 0) {
      Point m = a + ((xw - a.x) / (b.x - a.x)) * (b - a);
      return std::min(span(a, m, xw), span(m, b, xw));
    }
    return span(a, b, xw);
  }

  Point u_, v_, ex_, ey_;
  double len_ = 0;
};

struct FrameChoice {
  Point apex;
  double height = 0;
};

FrameChoice fit_child_frame(Point u, Point v, const std::vector<Segment>& obstacles) {
  static constexpr double kSpots[] = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  FrameChoice best;
  double best_score = -1;
  for (int side : {1, -1}) {
    FrameFitter fit(u, v, side);
    for (double t : kSpots) {
      double xw = t * fit.len();
      double dmax = std::numeric_limits<double>::infinity();
      for (const Segment& s : obstacles) dmax = std::min(dmax, fit.bound(s, xw));
      double d = 0.8 * dmax;
      double score = d * std::min({1.0, 0.5 / t, 0.5 / (1.0 - t)});
      if (std::isfinite(d) && score > best_score) {
        best_score = score;
        best.height = d;
        best.apex = u + t * (v - u) + d * fit.ey();
      }
    }
  }
  return best;
}

bool feasible(const LocalFrame& f, double x, double y, double z, double kappa) {
  auto ap = detail::choose_apex(f, x, y, kappa);
  return ap.s13 > 0 && ap.s23 > 0 && f.len - z > 0;
}

// Largest sigma such that lengths sigma * (x, y, z) still fit the frame.
double max_scale(const LocalFrame& f, double x, double y, double z, double kappa) {
  double lo = 1.0, hi = f.len / std::max({x, y, z});
  if (!feasible(f, lo * x, lo * y, lo * z, kappa)) return 0.0;
  for (int it = 0; it < 50 && hi > lo * (1 + 1e-12); ++it) {
    double mid = std::sqrt(lo * hi);
    if (feasible(f, mid * x, mid * y, mid * z, kappa))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

constexpr double kKappas[] = {0.6, 0.8, 0.95};
// Relative to the top frame side; a few hundred ulps of the coordinates.
constexpr double kPrecisionFloor = 1e-13;

}  // namespace

DrawReport draw_2tree(const TwoTree& g, TwoTreeDrawStats* stats) {
  int n = g.size();
  double side = f_weight(std::max(1, n - 1));
  Drawing out(n);
  TwoTreeDrawStats st;
  st.frame_side = side;
  st.min_frame_height = std::numeric_limits<double>::infinity();
  if (n == 2) {
    out[0] = {0, 0};
    out[1] = {side, 0};
    if (stats) *stats = st;
    return make_report(g.graph(), std::move(out), side);
  }

  std::vector<Piece> pieces;
  {
    Piece top;
    top.tree = g;
    top.to_global.resize(n);
    std::iota(top.to_global.begin(), top.to_global.end(), 0);
    pieces.push_back(std::move(top));
  }
  std::vector<int> level{0};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    pieces[i].dec = decompose_2tree(pieces[i].tree);
    pieces[i].child.assign(pieces[i].dec.components.size(), -1);
    for (std::size_t c = 0; c < pieces[i].dec.components.size(); ++c) {
      Component& comp = pieces[i].dec.components[c];
      if (comp.bare()) continue;
      Piece p;
      p.tree = std::move(comp.tree);
      p.to_global.reserve(comp.to_parent.size());
      for (Vertex v : comp.to_parent) p.to_global.push_back(pieces[i].to_global[v]);
      pieces[i].child[c] = static_cast<int>(pieces.size());
      level.push_back(level[i] + 1);
      pieces.push_back(std::move(p));
    }
  }
  st.pieces = static_cast<int>(pieces.size());
  st.depth = *std::max_element(level.begin(), level.end()) + 1;

  // Per-class length demands, bottom-up.
  std::vector<std::array<double, 3>> demand(pieces.size());
  for (std::size_t i = pieces.size(); i-- > 0;) {
    Piece& p = pieces[i];
    std::array<double, 3> m{1.0, 1.0, 1.0};  // 1-2, 1-3, 2-3
    for (std::size_t c = 0; c < p.child.size(); ++c) {
      double r = p.child[c] >= 0 ? pieces[p.child[c]].req : 1.0;
      int k = static_cast<int>(p.dec.components[c].root_class);
      m[k] = std::max(m[k], r);
      if (p.child[c] >= 0) p.height = std::max(p.height, pieces[p.child[c]].height + 1);
    }
    demand[i] = m;
    p.req = std::max(m[1] + m[2], m[0]);
  }

  // Top frame: equilateral triangle; grown only if the layout cannot fit.
  auto top_frame = [&](double s) {
    return Triangle{{Point{0, 0}, Point{s, 0}, Point{0.5 * s, 0.5 * std::sqrt(3.0) * s}}};
  };
  {
    auto fits = [&](double s) {
      LocalFrame f(top_frame(s));
      for (double k : kKappas)
        if (feasible(f, demand[0][1], demand[0][2], demand[0][0], k)) return true;
      return false;
    };
    while (!fits(side)) {
      side *= 1.0 + 1.0 / 64;
      st.frame_enlarged = true;
    }
    st.frame_side = side;
  }
  pieces[0].frame = top_frame(side);
  out[0] = pieces[0].frame.v[0];
  out[1] = pieces[0].frame.v[1];
  const double floor = kPrecisionFloor * side;

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Piece& p = pieces[i];
    LocalFrame f(p.frame);
    auto [z, x, y] = demand[i];
    double kappa = 0, smax = 0;
    for (double k : kKappas) {
      smax = max_scale(f, x, y, z, k);
      if (smax > 0) {
        kappa = k;
        break;
      }
    }
    if (smax <= 0) throw Error("frame-too-small", "nested frame cannot hold its skeleton");
    double sigma = std::pow(smax, p.height / (p.height + 1.0));
    detail::LayoutTuning tune;
    tune.kappa = kappa;
    std::vector<int> cls(p.dec.skeleton.size());
    for (int s = 0; s < p.dec.skeleton.size(); ++s)
      cls[s] = p.dec.vertex_class[p.dec.skeleton_to_parent[s]];
    auto lay = detail::l2t_layout(p.dec.skeleton, cls, p.frame, sigma * z, sigma * x, sigma * y, tune);
    if (lay.min_spacing < floor)
      throw Error("precision-exhausted", "point spacing " + sci(lay.min_spacing) +
                                             " below the representable floor");
    // local piece id -> world point
    std::vector<Point> at(p.tree.size());
    for (int s = 0; s < p.dec.skeleton.size(); ++s) {
      Vertex lv = p.dec.skeleton_to_parent[s];
      at[lv] = lay.pos[s];
      out[p.to_global[lv]] = lay.pos[s];
    }

    std::vector<int> order;
    for (std::size_t c = 0; c < p.child.size(); ++c)
      if (p.child[c] >= 0) order.push_back(static_cast<int>(c));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const Piece& pa = pieces[p.child[a]];
      const Piece& pb = pieces[p.child[b]];
      if (pa.height != pb.height) return pa.height > pb.height;
      return pa.req > pb.req;
    });
    if (order.empty()) continue;

    std::vector<Segment> obstacles;
    for (const Edge& e : p.dec.skeleton.graph().edges())
      obstacles.push_back({lay.pos[e.u], lay.pos[e.v]});
    for (int k = 0; k < 3; ++k) obstacles.push_back({p.frame.v[k], p.frame.v[(k + 1) % 3]});
    for (int c : order) {
      const Component& comp = p.dec.components[c];
      Point u = at[comp.to_parent[0]], v = at[comp.to_parent[1]];
      std::vector<Segment> others;
      others.reserve(obstacles.size());
      for (const Segment& s : obstacles) {
        bool same = (s.a == u && s.b == v) || (s.a == v && s.b == u);
        if (!same) others.push_back(s);
      }
      FrameChoice fc = fit_child_frame(u, v, others);
      st.min_frame_height = std::min(st.min_frame_height, fc.height);
      if (!(fc.height >= floor))
        throw Error("precision-exhausted", "component frame height " + sci(fc.height) +
                                               " below the representable floor");
      pieces[p.child[c]].frame = Triangle{{u, v, fc.apex}};
      obstacles.push_back({u, fc.apex});
      obstacles.push_back({v, fc.apex});
    }
  }
  if (stats) *stats = st;
  return make_report(g.graph(), std::move(out), st.frame_side);
}

}  // namespace elr

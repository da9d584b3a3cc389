// Acceptance run: one PASS/FAIL line per criterion, details on the
// following indented lines.  `--expect-fail N` (repeatable) names criteria
// whose failure is a documented limitation; they still print FAIL but do not
// change the exit code.  An expected failure that passes is reported.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "elr/drawers.hpp"
#include "elr/error.hpp"
#include "elr/generators.hpp"
#include "elr/metrics.hpp"
#include "support.hpp"

using namespace elr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;

  void fail(std::string why) {
    if (notes.size() < 12) notes.push_back(std::move(why));
    pass = false;
  }
};

// Certified drawings kept for the criteria that reuse them.
struct Sample {
  std::string name;
  Graph graph;
  Drawing drawing;
  double ratio;
};

std::vector<Sample> pool_plane3, pool_two_tree, pool_coloring;

Outcome plane_3tree_bound() {
  Outcome o;
  double worst_time = 0, worst_slack = 1e300;
  int count = 0;
  auto run = [&](const std::string& name, const Plane3Tree& t) {
    ++count;
    int depth = rep_tree_depth(t);
    auto t0 = Clock::now();
    DrawReport r;
    try {
      r = draw_plane_3tree(t, 0.1);
    } catch (const Error& e) {
      o.fail(name + ": " + e.what());
      return;
    }
    double secs = seconds_since(t0);
    worst_time = std::max(worst_time, secs);
    if (!verify_planar_straightline(t.graph(), r.drawing).ok) o.fail(name + ": not certified planar");
    if (!(r.min_len >= 1 - 1e-9)) o.fail(name + fmt(": min edge %.17g", r.min_len));
    double cap = depth + 1 + 0.1;
    worst_slack = std::min(worst_slack, cap - r.ratio);
    if (!(r.ratio <= cap)) o.fail(name + fmt(": ratio %.6f > %.6f", r.ratio, cap));
    if (!(secs < 1.0)) o.fail(name + fmt(": %.3f s", secs));
    pool_plane3.push_back({name, t.graph(), r.drawing, r.ratio});
  };
  for (int k = 1; k <= 15; ++k) run(fmt("nested k=%d", k), gen_nested_triangles(k));
  for (int d = 1; d <= 7; ++d) run(fmt("balanced d=%d", d), gen_balanced_3tree(d, 1000 + d));
  o.summary = fmt("%d instances, smallest margin to depth+1.1 = %.4f, slowest %.3f s", count, worst_slack, worst_time);
  return o;
}

Outcome two_tree_bound() {
  Outcome o;
  const int sizes[] = {10, 100, 500, 2001};
  double worst_time = 0, worst_frac = 0;
  int count = 0;
  for (int n : sizes) {
    for (int i = 0; i < 50; ++i) {
      ++count;
      auto t = gen_random_2tree(n, 7000 + 131 * n + i);
      std::string name = fmt("N=%d seed#%d", n, i);
      auto t0 = Clock::now();
      DrawReport r;
      try {
        r = draw_2tree(t);
      } catch (const Error& e) {
        o.fail(name + ": " + e.what());
        continue;
      }
      double secs = seconds_since(t0);
      if (n == 2001) worst_time = std::max(worst_time, secs);
      double cap = std::pow(static_cast<double>(n - 1), 0.6942419) * (1 + 1e-9);
      worst_frac = std::max(worst_frac, r.ratio / cap);
      if (!verify_planar_straightline(t.graph(), r.drawing).ok) o.fail(name + ": not certified planar");
      if (!(r.ratio <= cap)) o.fail(name + fmt(": ratio %.6f > %.6f", r.ratio, cap));
      if (n == 2001 && !(secs < 10.0)) o.fail(name + fmt(": %.3f s", secs));
      if (i < 5) pool_two_tree.push_back({name, t.graph(), r.drawing, r.ratio});
    }
  }
  o.summary = fmt("%d instances (50 per N), largest ratio/bound = %.4f, slowest at N=2001 %.3f s", count, worst_frac,
                  worst_time);
  return o;
}

Outcome decomposition_bounds() {
  Outcome o;
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> size(4, 10001);
  int largest = 0;
  for (int i = 0; i < 1000; ++i) {
    int n = i == 0 ? 10001 : size(rng);
    largest = std::max(largest, n);
    auto g = gen_random_2tree(n, rng());
    auto d = decompose_2tree(g);
    auto b = oracle::bounds_from_components(g, d);
    if (!oracle::bounds_hold(b))
      o.fail(fmt("N=%d: n=%ld x=%ld y=%ld z=%ld", n, b.n, b.x, b.y, b.z));
    auto rep = check_decomposition(g, d);
    if (!rep.ok) o.fail(fmt("N=%d: %s", n, rep.violations[0].kind.c_str()));
  }
  o.summary = fmt("1000 instances, N in [4, 10001], largest N = %d", largest);
  return o;
}

Outcome l2t_properties() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> size(3, 200);
  for (int i = 0; i < 200; ++i) {
    int n = size(rng);
    auto h = gen_linear_2tree(oracle::random_profile(n, rng));
    auto p = oracle::random_admissible_params(rng);
    std::string name = fmt("#%d N=%d", i, n);
    Drawing d;
    try {
      d = l2t_draw(h, p);
    } catch (const Error& e) {
      o.fail(name + ": " + e.what());
      continue;
    }
    auto c = oracle::check_l_properties(h, d, p);
    if (!c.l1) o.fail(name + ": L1");
    if (!c.l2) o.fail(name + ": L2");
    if (!c.l3) o.fail(name + ": L3");
    if (!verify_planar_straightline(h.graph(), d).ok) o.fail(name + ": not planar");
  }
  o.summary = "200 linear 2-trees, N in [3, 200], random frames and thresholds";
  return o;
}

Outcome bipartite_window() {
  Outcome o;
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> ops_of(0, 300);
  std::map<int, std::pair<int, int>> by_bucket;  // ops / 50 -> (passed, total)
  int passed = 0, total = 0, largest_ok = -1;
  for (int i = 0; i < 60; ++i) {
    int ops = i == 0 ? 300 : ops_of(rng);
    auto b = gen_bipartite_random(ops, rng());
    ++total;
    auto& bucket = by_bucket[std::min(ops / 50, 5)];
    ++bucket.second;
    std::string name = fmt("ops=%d", ops);
    try {
      auto r = draw_bipartite_maximal(b, 0.05);
      bool ok = verify_planar_straightline(b.graph.graph(), r.drawing).ok && r.min_len > 1 && r.max_len < 1.05;
      if (!ok) {
        o.fail(name + fmt(": window or planarity violated (min %.17g, max %.17g)", r.min_len, r.max_len));
        continue;
      }
      ++passed;
      ++bucket.first;
      largest_ok = std::max(largest_ok, ops);
    } catch (const Error& e) {
      o.fail(name + ": " + e.what());
    }
  }
  std::string buckets;
  for (auto& [k, v] : by_bucket) buckets += fmt(" [%d,%d]:%d/%d", 50 * k, k == 5 ? 300 : 50 * k + 49, v.first, v.second);
  o.summary = fmt("%d/%d instances drawn in the window, largest op count drawn %d; by op count%s", passed, total,
                  largest_ok, buckets.c_str());
  return o;
}

Outcome lower_bound_consequence() {
  Outcome o;
  std::string ratios;
  for (int k = 2; k <= 12; ++k) {
    auto t = gen_nested_triangles(k);
    auto r = draw_plane_3tree(t, 0.1);
    if (!verify_planar_straightline(t.graph(), r.drawing).ok) o.fail(fmt("k=%d: not certified planar", k));
    if (!verify_embedding(t.plane_graph(), r.drawing).ok) o.fail(fmt("k=%d: outer face is not the outer ring", k));
    auto p = nested_triangle_perimeters(t, r.drawing, true);
    if (!(p.perimeters[0] >= 3)) o.fail(fmt("k=%d: p1 = %.6f", k, p.perimeters[0]));
    for (int i = 1; i < k; ++i)
      if (!(p.perimeters[i] - p.perimeters[i - 1] >= 0.3))
        o.fail(fmt("k=%d: gap %d = %.6f", k, i, p.perimeters[i] - p.perimeters[i - 1]));
    for (auto& v : p.violations) o.fail(fmt("k=%d: ", k) + v);
    if (!(r.ratio >= 0.1 * k)) o.fail(fmt("k=%d: ratio %.6f", k, r.ratio));
    ratios += fmt(" %.2f", r.ratio);
  }
  o.summary = "k = 2..12, ratios" + ratios;
  return o;
}

Outcome lemma_oracles() {
  Outcome o;
  auto t0 = Clock::now();
  long rejections = 0;
  for (Lemma l : {Lemma::two, Lemma::three}) {
    auto r = lemma_oracle(l, 100000, l == Lemma::two ? 2 : 3);
    rejections += r.rejections;
    for (auto& v : r.report.violations) o.fail(v.kind + " " + v.detail);
  }
  double secs = seconds_since(t0);
  if (!(secs < 30)) o.fail(fmt("%.2f s", secs));
  o.summary = fmt("2 x 100000 samples, %ld rejections, %.2f s", rejections, secs);
  return o;
}

Outcome coloring_forward() {
  Outcome o;
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> size(2, 200);
  int kmax = 0;
  for (int i = 0; i < 50; ++i) {
    int n = size(rng);
    auto g = gen_random_sparse(n, rng());
    int k = color_count(greedy_coloring(g));
    kmax = std::max(kmax, k);
    std::string name = fmt("#%d n=%d k=%d", i, n, k);
    DrawReport r;
    try {
      r = draw_by_coloring(g, 0.3, i);
    } catch (const Error& e) {
      o.fail(name + ": " + e.what());
      continue;
    }
    if (!verify_proper(g, r.drawing).ok) o.fail(name + ": not proper");
    double hi = std::sqrt(2.0 * k) + 0.2;
    for (const Edge& e : g.edges()) {
      double len = r.drawing.length(e);
      if (!(len > 0.8 && len < hi)) {
        o.fail(name + fmt(": length %.6f outside (0.8, %.6f)", len, hi));
        break;
      }
    }
    pool_coloring.push_back({name, g, r.drawing, g.edge_count() ? r.ratio : 1.0});
  }
  o.summary = fmt("50 graphs, n <= 200, up to %d colors", kmax);
  return o;
}

Outcome coloring_backward() {
  Outcome o;
  int count = 0, worst_used = 0, worst_cap = 0;
  const double eps = 0.1;
  for (auto* pool : {&pool_plane3, &pool_two_tree, &pool_coloring}) {
    for (const Sample& s : *pool) {
      if (s.graph.edge_count() == 0) continue;
      ++count;
      if (!verify_proper(s.graph, s.drawing).ok) {
        o.fail(s.name + ": input not proper");
        continue;
      }
      double h = edge_length_ratio(s.graph, s.drawing);
      auto gc = color_from_drawing(s.graph, s.drawing, eps);
      int cap = static_cast<int>(std::ceil(std::sqrt(2.0) * (h + 1 + gc.epsilon)));
      int used = color_count(gc.colors);
      if (!is_proper_coloring(s.graph, gc.colors))
        o.fail(s.name + ": coloring not proper");
      if (used > cap * cap) o.fail(s.name + fmt(": %d colors > %d", used, cap * cap));
      if (cap * cap > worst_cap) {
        worst_cap = cap * cap;
        worst_used = used;
      }
    }
  }
  o.summary = fmt("%d drawings from criteria 1, 2 and 8; largest cap %d (used %d)", count, worst_cap, worst_used);
  return o;
}

Outcome restriction_monotone() {
  Outcome o;
  std::vector<const Sample*> all;
  for (auto& s : pool_plane3) all.push_back(&s);
  for (auto& s : pool_two_tree) all.push_back(&s);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Sample& s = *all[rng() % all.size()];
    double keep_p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    std::vector<Edge> keep;
    for (const Edge& e : s.graph.edges())
      if (std::bernoulli_distribution(keep_p)(rng)) keep.push_back(e);
    if (keep.empty()) keep.push_back(s.graph.edges()[rng() % s.graph.edge_count()]);
    double full = edge_length_ratio(s.graph, s.drawing);
    double sub = edge_length_ratio(s.graph.edge_subgraph(keep), s.drawing);
    if (!(sub <= full * (1 + 1e-12))) o.fail(s.name + fmt(": restricted %.17g > full %.17g", sub, full));
  }
  o.summary = fmt("100 pairs over %zu drawings", all.size());
  return o;
}

Outcome golden_superadditivity() {
  Outcome o;
  long checked = 0;
  double tightest = 1e300;
  for (long n = 1; n <= 200; ++n)
    for (long x = 1; x <= n; ++x)
      for (long y = 1; y <= n; ++y) {
        if (!oracle::split_admissible(x, y, n)) continue;
        ++checked;
        double lhs = f_weight(x) + f_weight(y), rhs = f_weight(n);
        tightest = std::min(tightest, (rhs - lhs) / rhs);
        if (!(lhs <= rhs * (1 + 1e-12))) o.fail(fmt("x=%ld y=%ld n=%ld: %.17g > %.17g", x, y, n, lhs, rhs));
      }
  o.summary = fmt("%ld admissible triples, smallest relative slack %.3g", checked, tightest);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expect_fail.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail N]...\n", argv[0]);
      return 2;
    }
  }
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "plane 3-tree drawings within depth + 1 + eps", plane_3tree_bound},
      {2, "2-tree drawings within (N-1)^log2(phi)", two_tree_bound},
      {3, "decomposition component bounds in integers", decomposition_bounds},
      {4, "linear 2-tree layout properties L1-L3", l2t_properties},
      {5, "maximal bipartite drawings inside (1, 1.05)", bipartite_window},
      {6, "nested triangle perimeter growth and ratio >= 0.1k", lower_bound_consequence},
      {7, "triangle perimeter lemma oracles", lemma_oracles},
      {8, "coloring drawings inside (0.8, sqrt(2k) + 0.2)", coloring_forward},
      {9, "grid coloring from drawings within the color cap", coloring_backward},
      {10, "subgraph restriction never raises the ratio", restriction_monotone},
      {11, "golden weight superadditivity", golden_superadditivity},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    bool expected = expect_fail.count(c.id) > 0;
    const char* tag = o.pass ? (expected ? "PASS (expected to fail)" : "PASS") : (expected ? "FAIL (expected)" : "FAIL");
    std::printf("[%s] criterion %d: %s (%.1f s)\n", tag, c.id, c.name, seconds_since(t0));
    std::printf("    %s\n", o.summary.c_str());
    for (const auto& n : o.notes) std::printf("    - %s\n", n.c_str());
    std::fflush(stdout);
    if (o.pass == expected) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}

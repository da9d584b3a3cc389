#include <doctest.h>

#include <cmath>
#include <random>

#include "elr/drawers.hpp"
#include "elr/generators.hpp"
#include "elr/metrics.hpp"
#include "support.hpp"

using namespace elr;
using oracle::error_code;

namespace {

void check_certified(const Graph& g, const DrawReport& r) {
  auto v = verify_planar_straightline(g, r.drawing);
  CHECK(v.ok);
  CHECK(r.ratio <= r.theoretical_bound * (1 + 1e-9));
  CHECK(r.ratio == doctest::Approx(r.max_len / r.min_len));
}

}  // namespace

TEST_CASE("generator sizes") {
  for (int k = 1; k <= 6; ++k) {
    CHECK(gen_nested_triangles(k).vertex_count() == 3 * k);
    CHECK(nested_triangle_rings(k).size() == static_cast<std::size_t>(k));
    CHECK(gen_lower_bound_graph(k).vertex_count() == 6 * k - 2);
  }
  // Depth counts the leaf level: levels 1..d-1 hold 3^(i-1) faces, each
  // receiving one vertex.
  for (int d = 1; d <= 7; ++d)
    CHECK(gen_balanced_3tree(d, 0).vertex_count() == 3 + (static_cast<int>(std::pow(3, d - 1)) - 1) / 2);
  CHECK(gen_random_2tree(100, 5).size() == 100);
  CHECK(gen_linear_2tree({3, 1, 2}).size() == 8);
  CHECK(gen_random_sparse(50, 1).edge_count() == 100);
  CHECK(gen_random_sparse(4, 1).edge_count() == 6);
  CHECK(error_code([] { gen_random_2tree(1, 0); }) == "invalid-size");
  CHECK(error_code([] { gen_nested_triangles(0); }) == "invalid-size");
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(gen_random_2tree(200, 9).parent_pairs() == gen_random_2tree(200, 9).parent_pairs());
  CHECK(gen_random_2tree(200, 9).parent_pairs() != gen_random_2tree(200, 10).parent_pairs());
  CHECK(gen_bipartite_random(40, 3).graph.rotations() == gen_bipartite_random(40, 3).graph.rotations());
}

TEST_CASE("plane 3-tree drawer: triangle and K4") {
  Plane3Tree tri;
  auto r = draw_plane_3tree(tri, 0.1);
  check_certified(tri.graph(), r);
  CHECK(r.ratio <= 2.1);
  CHECK(r.min_len >= 1);
  Plane3Tree k4;
  k4.insert({0, 1, 2});
  r = draw_plane_3tree(k4, 0.1);
  check_certified(k4.graph(), r);
  CHECK(r.ratio <= 3.1);
  CHECK(error_code([&] { draw_plane_3tree(k4, 0); }) == "invalid-epsilon");
}

TEST_CASE("plane 3-tree drawer: integer abscissae, embedding respected") {
  for (int k = 1; k <= 8; ++k) {
    auto t = gen_nested_triangles(k);
    auto r = draw_plane_3tree(t, 0.1);
    check_certified(t.graph(), r);
    CHECK(verify_embedding(t.plane_graph(), r.drawing).ok);
    for (const Point& p : r.drawing.points()) CHECK(p.x == std::round(p.x));
    CHECK(r.min_len >= 1 - 1e-9);
    CHECK(r.theoretical_bound == doctest::Approx(rep_tree_depth(t) + 1.1));
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Plane3Tree t;
    for (int i = 0; i < 60; ++i) {
      auto f = t.internal_faces();
      t.insert(f[std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng)]);
    }
    auto r = draw_plane_3tree(t, 0.1);
    check_certified(t.graph(), r);
    CHECK(r.min_len >= 1 - 1e-9);
  }
}

TEST_CASE("2-tree drawer on small and medium instances") {
  for (int n : {2, 3, 4, 5, 8, 13, 40, 150}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto t = gen_random_2tree(n, seed);
      TwoTreeDrawStats st;
      auto r = draw_2tree(t, &st);
      check_certified(t.graph(), r);
      CHECK(r.min_len >= 1 - 1e-9);
      if (n >= 2) CHECK(r.ratio <= std::max(1.0, f_weight(n - 1)) * (1 + 1e-9));
    }
  }
}

TEST_CASE("L2T drawer: properties L1 to L3") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial * 2;
    auto h = gen_linear_2tree(oracle::random_profile(n, rng));
    auto p = oracle::random_admissible_params(rng);
    Drawing d = l2t_draw(h, p);
    auto c = oracle::check_l_properties(h, d, p);
    CHECK(c.l1);
    CHECK(c.l2);
    CHECK(c.l3);
    CHECK(verify_planar_straightline(h.graph(), d).ok);
  }
  auto fork = TwoTree({{0, 1}, {0, 2}, {1, 2}});
  std::mt19937_64 r2(1);
  CHECK(error_code([&] { l2t_draw(fork, oracle::random_admissible_params(r2)); }) == "not-linear");
  L2TParams tight;
  tight.frame = {{Point{0, 0}, Point{1.5, 0}, Point{0.75, 1}}};
  CHECK(error_code([&] { l2t_draw(gen_linear_2tree({1}), tight); }) == "frame-too-small");
}

TEST_CASE("bipartite drawer: window on small scripts") {
  auto base = gen_bipartite_maximal({});
  auto r = draw_bipartite_maximal(base, 0.05);
  check_certified(base.graph.graph(), r);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto b = gen_bipartite_random(4, seed);
    auto rep = draw_bipartite_maximal(b, 0.05);
    auto v = verify_planar_straightline(b.graph.graph(), rep.drawing);
    CHECK(v.ok);
    CHECK(verify_embedding(b.graph, rep.drawing).ok);
    CHECK(rep.min_len > 1);
    CHECK(rep.max_len < 1.05);
  }
  CHECK(error_code([&] { draw_bipartite_maximal(base, 0); }) == "invalid-epsilon");
}

TEST_CASE("greedy smallest-last coloring") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen_random_sparse(120, seed);
    auto c = greedy_coloring(g);
    CHECK(is_proper_coloring(g, c));
    // Smallest-last uses at most degeneracy + 1 colors; average degree 4
    // bounds the degeneracy of these graphs well below 10.
    CHECK(color_count(c) <= 10);
  }
  Graph k5(5);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) k5.add_edge(a, b);
  CHECK(color_count(greedy_coloring(k5)) == 5);
  CHECK_FALSE(is_proper_coloring(k5, {0, 0, 1, 2, 3}));
}

TEST_CASE("coloring drawer window and the grid coloring back") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gen_random_sparse(80, seed);
    int k = color_count(greedy_coloring(g));
    auto r = draw_by_coloring(g, 0.3, seed);
    CHECK(verify_proper(g, r.drawing).ok);
    CHECK(r.min_len > 0.8);
    CHECK(r.max_len < std::sqrt(2.0 * k) + 0.2);
    auto gc = color_from_drawing(g, r.drawing, 0.1);
    CHECK(is_proper_coloring(g, gc.colors));
    double h = r.ratio;
    int cap = static_cast<int>(std::ceil(std::sqrt(2.0) * (h + 1 + 0.1)));
    CHECK(color_count(gc.colors) <= cap * cap);
  }
  CHECK(error_code([] { draw_by_coloring(gen_random_sparse(5, 0), 1.5); }) == "invalid-epsilon");
  Graph path(3, {{0, 1}, {1, 2}});
  Drawing bad(std::vector<Point>{{0, 0}, {2, 0}, {1, 0}});
  CHECK(error_code([&] { color_from_drawing(path, bad, 0.1); }) == "improper-input");
}

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

Graph k4() {
  Graph g(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("edge length ratio examples") {
  Graph sq(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(edge_length_ratio(sq, Drawing({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == 1.0);
  Graph path(3, {{0, 1}, {1, 2}});
  CHECK(edge_length_ratio(path, Drawing({{0, 0}, {1, 0}, {3, 0}})) == 2.0);
  Graph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(edge_length_ratio(tri, Drawing({{0, 0}, {3, 0}, {3, 4}})) == doctest::Approx(5.0 / 3.0));
  CHECK(error_code([&] { edge_length_ratio(Graph(2), Drawing(2)); }) == "no-edges");
  CHECK(error_code([&] { edge_length_ratio(path, Drawing({{0, 0}, {0, 0}, {1, 0}})); }) == "degenerate-edge");
}

TEST_CASE("ratio is scale invariant") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(-5, 5), S(1e-3, 1e3);
  for (int t = 0; t < 100; ++t) {
    auto g = gen_random_sparse(20, t);
    std::vector<Point> p, q;
    double s = S(rng);
    for (int i = 0; i < 20; ++i) {
      p.push_back({U(rng), U(rng)});
      q.push_back(s * p.back());
    }
    double a = edge_length_ratio(g, Drawing(p)), b = edge_length_ratio(g, Drawing(q));
    CHECK(std::abs(a - b) <= 1e-12 * a);
  }
}

TEST_CASE("planar verifier examples") {
  Graph g = k4();
  Drawing centroid({{0, 0}, {3, 0}, {0, 3}, {1, 1}});
  CHECK(verify_planar_straightline(g, centroid).ok);
  Drawing convex({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto r = verify_planar_straightline(g, convex);
  CHECK_FALSE(r.ok);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].ids.size() == 4);
}

TEST_CASE("proper verifier examples") {
  Graph x(4, {{0, 1}, {2, 3}});
  Drawing cross({{0, 0}, {2, 2}, {0, 2}, {2, 0}});
  CHECK(verify_proper(x, cross).ok);
  CHECK_FALSE(verify_planar_straightline(x, cross).ok);
  CHECK_FALSE(verify_proper(x, Drawing({{0, 0}, {2, 2}, {0, 0}, {2, 0}})).ok);
  CHECK_FALSE(verify_proper(x, Drawing({{0, 0}, {2, 2}, {1, 1}, {2, 0}})).ok);
}

TEST_CASE("serial and parallel scans agree; planar implies proper") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> U(0, 4);
  for (int t = 0; t < 60; ++t) {
    auto g = gen_random_sparse(25, t);
    std::vector<Point> p;
    for (int i = 0; i < 25; ++i) p.push_back({std::round(U(rng)), std::round(U(rng))});  // many degeneracies
    Drawing d(p);
    auto a = verify_planar_straightline(g, d, Exec::serial);
    auto b = verify_planar_straightline(g, d, Exec::parallel);
    CHECK(a.ok == b.ok);
    CHECK(a.violations.size() == b.violations.size());
    auto c = verify_proper(g, d, Exec::serial);
    CHECK(c.ok == verify_proper(g, d, Exec::parallel).ok);
    if (a.ok) CHECK(c.ok);
  }
}

TEST_CASE("embedding verifier catches a mirrored drawing") {
  auto t = gen_nested_triangles(3);
  auto r = draw_plane_3tree(t, 0.1);
  CHECK(verify_embedding(t.plane_graph(), r.drawing).ok);
  std::vector<Point> m;
  for (const Point& p : r.drawing.points()) m.push_back({-p.x, p.y});
  CHECK(verify_planar_straightline(t.graph(), Drawing(m)).ok);
  CHECK_FALSE(verify_embedding(t.plane_graph(), Drawing(m)).ok);
}

TEST_CASE("restricting to a subgraph never raises the ratio") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    auto tt = gen_random_2tree(60, t);
    auto r = draw_2tree(tt);
    std::vector<Edge> keep;
    for (const Edge& e : tt.graph().edges())
      if (std::bernoulli_distribution(0.5)(rng)) keep.push_back(e);
    if (keep.empty()) keep.push_back(tt.graph().edges()[0]);
    double sub = edge_length_ratio(tt.graph().edge_subgraph(keep), r.drawing);
    CHECK(sub <= r.ratio * (1 + 1e-12));
  }
}

TEST_CASE("perimeters of nested triangles") {
  auto t1 = gen_nested_triangles(1);
  double s = std::sqrt(3.0) / 2;
  auto tr = nested_triangle_perimeters(t1, Drawing({{0, 0}, {1, 0}, {0.5, s}}), false);
  REQUIRE(tr.perimeters.size() == 1);
  CHECK(tr.perimeters[0] == doctest::Approx(3));
  CHECK(tr.ok());
  for (int k = 2; k <= 6; ++k) {
    auto t = gen_nested_triangles(k);
    auto r = draw_plane_3tree(t, 0.1);
    auto p = nested_triangle_perimeters(t, r.drawing, true);
    CHECK(p.ok());
    CHECK(p.perimeters.size() == static_cast<std::size_t>(k));
    for (int i = 1; i < k; ++i) CHECK(p.perimeters[i] - p.perimeters[i - 1] >= 0.3);
  }
  auto other = gen_balanced_3tree(2, 0);
  CHECK(error_code([&] { nested_triangle_perimeters(other, draw_plane_3tree(other, 0.1).drawing, true); }) ==
        "not-nested-triangles");
}

TEST_CASE("decomposition checker") {
  auto lin = gen_linear_2tree({2, 3, 1});
  CHECK(check_decomposition(lin, decompose_2tree(lin)).ok);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gen_random_2tree(300, seed);
    auto d = decompose_2tree(g);
    CHECK(check_decomposition(g, d).ok);
    auto b = oracle::bounds_from_components(g, d);
    CHECK(oracle::bounds_hold(b));
    auto lib = component_bounds(g, d);
    CHECK(lib.x == b.x);
    CHECK(lib.y == b.y);
    CHECK(lib.z == b.z);
    CHECK(component_bounds_hold(lib) == oracle::bounds_hold(b));
  }
  auto g = gen_random_2tree(50, 2);
  auto d = decompose_2tree(g);
  // A component root that is not a skeleton edge.
  for (auto& c : d.components) {
    for (Vertex v = 0; v < g.size(); ++v)
      if (d.vertex_class[v] == 0 && g.graph().has_edge(v, c.root.u)) {
        c.root = Edge(c.root.u, v);
        break;
      }
    break;
  }
  CHECK_FALSE(check_decomposition(g, d).ok);
}

TEST_CASE("lemma oracles") {
  // Centroid of bcd: the inner triangle is strictly smaller.
  Point b{0, 0}, c{4, 0}, d{1, 3};
  Point a = (1.0 / 3) * (b + c + d);
  CHECK(perimeter(Triangle{{b, c, d}}) > perimeter(Triangle{{a, b, c}}));
  // a on cd with |ad| = 1 and a right angle at a: gap above one.
  Point d2{0, 0}, c2{3, 0}, a2{1, 0}, b2{1, 2};
  CHECK(dot(b2 - a2, c2 - a2) == 0);
  double gap = perimeter(Triangle{{b2, c2, d2}}) - perimeter(Triangle{{a2, b2, c2}});
  CHECK(gap > 1);
  CHECK(gap == doctest::Approx(std::sqrt(5.0) - 1));

  for (Lemma l : {Lemma::two, Lemma::three}) {
    auto s = lemma_oracle(l, 20000, 5, Exec::serial);
    auto p = lemma_oracle(l, 20000, 5, Exec::parallel);
    CHECK(s.report.ok);
    CHECK(s.samples == 20000);
    CHECK(s.rejections == p.rejections);
  }
  CHECK(error_code([] { lemma_oracle(Lemma::two, 0, 1); }) == "invalid-size");
}

TEST_CASE("golden weight") {
  CHECK(f_weight(1) == 1.0);
  CHECK(f_weight(2) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-14));
  CHECK(error_code([] { f_weight(0); }) == "invalid-size");
  for (long n = 1; n <= 200; ++n) {
    double ref = static_cast<double>(oracle::f_big(n));
    CHECK(std::abs(f_weight(n) - ref) <= 1e-14 * ref);
  }
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elr/drawers.hpp"
#include "elr/graph.hpp"
#include "elr/plane3tree.hpp"
#include "elr/plane_graph.hpp"
#include "elr/two_tree.hpp"

namespace elr {

struct Violation {
  std::string kind;
  std::vector<Vertex> ids;
  std::vector<Point> where;
  std::string detail;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
  double min_len = 0.0;
  double max_len = 0.0;
  double ratio = 0.0;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
};

// Longest over shortest edge.  Throws Error("no-edges") or
// Error("degenerate-edge").
double edge_length_ratio(const Graph& g, const Drawing& d);

enum class Exec { serial, parallel };

// Exact certification: distinct vertex points, no vertex on a non-incident
// edge, no two edges sharing a point other than a common endpoint.
VerifyReport verify_planar_straightline(const Graph& g, const Drawing& d, Exec exec = Exec::parallel);
// As above, but crossings between edges are allowed.
VerifyReport verify_proper(const Graph& g, const Drawing& d, Exec exec = Exec::parallel);
// Clockwise neighbor order around every vertex of degree >= 3 matches the
// rotation system, and the outer face walk bounds the unbounded face.
VerifyReport verify_embedding(const PlaneGraph& g, const Drawing& d);

struct PerimeterTrace {
  std::vector<double> perimeters;  // innermost ring first
  double gamma = 0.3;
  double scale = 1.0;              // factor applied by normalization
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Perimeters of the rings of a nested-triangles drawing; with normalize the
// drawing is first scaled to shortest edge 1.  Checks p1 >= 3 and growth of
// at least gamma per ring.  Throws Error("not-nested-triangles") when g is
// not the nested-triangles graph with k = n / 3 rings.
PerimeterTrace nested_triangle_perimeters(const Plane3Tree& g, const Drawing& d, bool normalize,
                                          double gamma = 0.3);

VerifyReport check_decomposition(const TwoTree& g, const Decomposition& d);

enum class Lemma { two, three };

struct OracleReport {
  VerifyReport report;
  long samples = 0;
  long rejections = 0;
};

// Samples configurations a, b, c, d with triangle abc inside bcd and checks
// the perimeter inequality of the lemma.  Throws Error("invalid-size") for
// samples < 1.
OracleReport lemma_oracle(Lemma which, long samples, std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace elr

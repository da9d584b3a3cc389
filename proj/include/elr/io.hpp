#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elr/generators.hpp"
#include "elr/graph.hpp"
#include "elr/plane3tree.hpp"
#include "elr/plane_graph.hpp"
#include "elr/two_tree.hpp"

namespace elr {

// Graph read from or written to a graph file.  The family tag decides which
// construction witness is present:
//   plane-3tree families (nested-triangles, lower-bound, balanced-3tree,
//   plane-3tree): insertion faces, `plane3` set;
//   two-tree, linear-2tree: parent pairs, `two_tree` set;
//   bipartite-maximal: P0/P1 script, `bipartite` set;
//   sparse: edges only.
// Families with a witness also carry the rotation system and outer face.
struct GraphModel {
  std::string family;
  Graph graph;
  std::optional<PlaneGraph> plane;
  std::optional<Plane3Tree> plane3;
  std::optional<TwoTree> two_tree;
  std::optional<BipartitePlane> bipartite;
};

GraphModel model_of(std::string family, const Plane3Tree& t);
GraphModel model_of(std::string family, const TwoTree& t);
GraphModel model_of(const BipartitePlane& b);
GraphModel model_of_sparse(const Graph& g);

inline constexpr int kSchemaVersion = 1;

// JSON text, canonical: sorted keys, sorted edge list, two-space indent.
std::string serialize_graph(const GraphModel& m);
// Throws Error("parse-error") for malformed text or missing fields and
// Error("invariant-violation") when the witness, edges, rotation and outer
// face disagree.  Messages name the offending field.
GraphModel parse_graph(std::string_view text);

// 64-bit FNV-1a, lowercase hex.
std::string fnv1a_hex(std::string_view bytes);
std::string graph_hash(const GraphModel& m);

struct DrawingMeta {
  std::string algorithm;
  double epsilon = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

struct DrawingModel {
  std::string graph_hash;
  Drawing drawing;
  DrawingMeta meta;
};

// Coordinates are written as decimal strings with 17 significant digits.
std::string serialize_drawing(const DrawingModel& d);
// With a graph, also checks the hash and that every vertex has coordinates
// (Error("invariant-violation")).
DrawingModel parse_drawing(std::string_view text, const GraphModel* graph = nullptr);

struct SvgOptions {
  double scale = 100.0;  // pixels per drawing unit
  bool labels = false;
  std::vector<Edge> highlight;  // drawn with class "skeleton"
};

// One <line> per edge, one <circle> per vertex, viewBox with a 5% margin.
// Throws Error("improper-input") unless the drawing is proper.
std::string render_svg(const Graph& g, const Drawing& d, const SvgOptions& opt = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace elr

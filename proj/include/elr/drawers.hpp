#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "elr/generators.hpp"
#include "elr/graph.hpp"
#include "elr/plane3tree.hpp"
#include "elr/two_tree.hpp"

namespace elr {

// log2 of the golden ratio.
inline constexpr double kGoldenExponent = 0.69424191363061737991;

// n^(log2 phi).  Throws Error("invalid-size") for n < 1.
double f_weight(long n);

struct DrawReport {
  Drawing drawing;
  double ratio = 0.0;
  double min_len = 0.0;
  double max_len = 0.0;
  double theoretical_bound = 0.0;
  // Set for graphs without edges, where ratio, min_len and max_len are 0.
  bool empty_ratio = false;
};

// Fills ratio and lengths from the drawing.
DrawReport make_report(const Graph& g, Drawing drawing, double bound);

struct L2TParams {
  Triangle frame;  // a1, a2, a3
  double l12 = 1.0;
  double l13 = 1.0;
  double l23 = 1.0;
};

// Draws a linear 2-tree inside params.frame with vertex 0 at a1, vertex 1 at
// a2, every other vertex strictly inside, and each edge longer than the
// minimum for its class.  Throws Error("not-linear") or
// Error("frame-too-small").
Drawing l2t_draw(const TwoTree& h, const L2TParams& params);

// Skeleton chosen by the greedy designated-edge chain.
Decomposition decompose_2tree(const TwoTree& g);

// n = N - 1 and the largest component sizes minus one per root class
// (0 when a class has no component).
struct ComponentBounds {
  long n = 0;
  long x = 0;  // 1-3
  long y = 0;  // 2-3
  long z = 0;  // 1-2
};
ComponentBounds component_bounds(const TwoTree& g, const Decomposition& d);
// z <= n/2 and (x <= n/2 and y <= (n-x)/2, or y <= n/2 and x <= (n-y)/2),
// evaluated in integers.
bool component_bounds_hold(const ComponentBounds& b);

// Integer x-coordinates throughout: the outer triangle gets side
// x-extensions 1, k, k+1 and y-extension epsilon, k = rep_tree_depth(g).
// Each inserted vertex takes the integer abscissa inside its face with the
// widest vertical chord among those leaving every child face a smaller
// x-gap >= 1 and a larger one >= its subtree depth; y is the chord midpoint.
// Throws Error("invalid-epsilon") for epsilon <= 0.
DrawReport draw_plane_3tree(const Plane3Tree& g, double epsilon);

struct TwoTreeDrawStats {
  int pieces = 0;            // recursive instances drawn with the layout
  int depth = 0;             // longest chain of nested instances
  double min_frame_height = 0.0;
  double frame_side = 0.0;   // side of the top frame
  bool frame_enlarged = false;
};

// Every edge length in [1, f(N-1)].  Throws Error("precision-exhausted")
// when a nested frame gets too thin to be represented reliably.
DrawReport draw_2tree(const TwoTree& g, TwoTreeDrawStats* stats = nullptr);

// Every edge length strictly inside (1, 1 + epsilon).  Vertices stay near
// the corners of the starting square, and repeated splits inside thin faces
// shrink the room for the next vertex geometrically, so long operation
// sequences end in Error("precision-exhausted") naming the step.
// Throws Error("invalid-epsilon") for epsilon <= 0.
DrawReport draw_bipartite_maximal(const BipartitePlane& g, double epsilon);

// Smallest-last greedy coloring; colors are 0..k-1.
std::vector<int> greedy_coloring(const Graph& g);
int color_count(const std::vector<int>& colors);
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

// Color classes on a grid of unit spacing, vertices of a class on a small
// circle around their grid point.  Needs 0 < epsilon < 1.
DrawReport draw_by_coloring(const Graph& g, double epsilon, std::uint64_t seed = 0);

struct GridColoring {
  std::vector<int> colors;
  double side = 0.0;   // big square side h + 1 + eps
  int columns = 0;     // small squares per row of a big square
  double epsilon = 0.0;  // after nudging
};
// Colors a proper drawing by the index of each vertex's small square inside
// its big square.  Throws Error("improper-input").
GridColoring color_from_drawing(const Graph& g, const Drawing& d, double epsilon);

}  // namespace elr

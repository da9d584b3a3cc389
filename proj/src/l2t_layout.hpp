#pragma once

#include <vector>

#include "elr/geometry.hpp"
#include "elr/two_tree.hpp"

namespace elr::detail {

struct LayoutTuning {
  double kappa = 0.6;   // apex point a at this fraction of the frame height
  double omega = 0.7;   // b-points span this fraction of a's height
  double theta = 0.9;   // share of each length slack spent on point spread
  double psi = 0.9;     // c/d-points stay within this fraction of the way to q
};

// Frame expressed in coordinates where a1 = (0, 0), a2 = (L, 0) and the
// third corner has positive y.
struct LocalFrame {
  Point a1, a2;
  Point ex, ey;  // world unit vectors
  double len = 0;
  Point apex;    // local coordinates of a3

  explicit LocalFrame(const Triangle& t);
  Point world(Point local) const;
  double height_at(double x) const;  // vertical extent of the frame above the base
};

struct ApexChoice {
  Point a;        // local
  double s13 = 0;  // |a a1| - l13
  double s23 = 0;
};

// Best point at the given height fraction balancing the two slacks.
ApexChoice choose_apex(const LocalFrame& f, double l13, double l23, double kappa);

struct Layout {
  std::vector<Point> pos;   // per vertex of h, world coordinates
  double min_spacing = 0;   // smallest distance between consecutive points
};

// Throws Error("frame-too-small") when no apex point gives positive slack.
Layout l2t_layout(const TwoTree& h, const std::vector<int>& cls, const Triangle& frame, double l12,
                  double l13, double l23, const LayoutTuning& tune = {});

}  // namespace elr::detail

#include <algorithm>
#include <cmath>
#include <limits>

#include "elr/drawers.hpp"
#include "elr/error.hpp"

namespace elr {

double f_weight(long n) {
  if (n < 1) throw Error("invalid-size", "f is defined for n >= 1");
  return std::pow(static_cast<double>(n), kGoldenExponent);
}

DrawReport make_report(const Graph& g, Drawing drawing, double bound) {
  DrawReport r;
  r.theoretical_bound = bound;
  if (g.edge_count() == 0) {
    r.empty_ratio = true;
  } else {
    r.min_len = std::numeric_limits<double>::infinity();
    for (const Edge& e : g.edges()) {
      double l = drawing.length(e);
      r.min_len = std::min(r.min_len, l);
      r.max_len = std::max(r.max_len, l);
    }
    r.ratio = r.min_len > 0 ? r.max_len / r.min_len : std::numeric_limits<double>::infinity();
  }
  r.drawing = std::move(drawing);
  return r;
}

}  // namespace elr

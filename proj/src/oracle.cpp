#include <random>
#include <string>

#include "elr/error.hpp"
#include "elr/metrics.hpp"

namespace elr {
namespace {

constexpr int kShards = 64;
constexpr long kRejectionCap = 10'000'000;

struct ShardResult {
  std::vector<Violation> violations;
  long rejections = 0;
};

std::string coords_text(Point a, Point b, Point c, Point d) {
  auto p = [](Point x) { return "(" + std::to_string(x.x) + "," + std::to_string(x.y) + ")"; };
  return "a=" + p(a) + " b=" + p(b) + " c=" + p(c) + " d=" + p(d);
}

ShardResult run_shard(Lemma which, long count, std::uint64_t seed, int shard, long cap) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> unit(1e-6, 1.0 - 1e-6);
  std::uniform_int_distribution<int> mode_of(0, 2);
  ShardResult out;
  for (long done = 0; done < count;) {
    if (out.rejections > cap) throw Error("rejection-cap", "oracle rejected too many configurations");
    Point b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)}, d{coord(rng), coord(rng)};
    int mode = mode_of(rng);
    if (std::abs(cross(c - b, d - b)) < 1e-3) {
      ++out.rejections;
      continue;
    }
    Point a;
    if (mode == 0) {
      a = {coord(rng), coord(rng)};
      Triangle outer{{b, c, d}};
      bool inside = point_in_triangle(a, outer, true) && point_segment_distance(a, {b, c}) > 1e-6 &&
                    point_segment_distance(a, {c, d}) > 1e-6 && point_segment_distance(a, {b, d}) > 1e-6;
      if (!inside) {
        ++out.rejections;
        continue;
      }
    } else {
      Point end = mode == 1 ? b : c;
      a = d + unit(rng) * (end - d);
    }
    if (which == Lemma::three && (dist(a, d) < 1.0 || dot(b - a, c - a) < 0)) {
      ++out.rejections;
      continue;
    }
    ++done;
    double inner = perimeter(Triangle{{a, b, c}});
    double outer = perimeter(Triangle{{b, c, d}});
    double need = which == Lemma::two ? inner : inner + 1.0;
    if (!(outer > need))
      out.violations.push_back({which == Lemma::two ? "perimeter-not-larger" : "perimeter-gap-below-one",
                                {},
                                {a, b, c, d},
                                coords_text(a, b, c, d)});
  }
  return out;
}

}  // namespace

OracleReport lemma_oracle(Lemma which, long samples, std::uint64_t seed, Exec exec) {
  if (samples < 1) throw Error("invalid-size", "oracle needs at least one sample");
  std::vector<ShardResult> parts(kShards);
  std::vector<std::string> errors(kShards);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
  for (int s = 0; s < kShards; ++s) {
    long count = samples / kShards + (s < samples % kShards ? 1 : 0);
    try {
      parts[s] = run_shard(which, count, seed, s, kRejectionCap / kShards);
    } catch (const Error& e) {
      errors[s] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error("rejection-cap", e);
  OracleReport rep;
  rep.samples = samples;
  for (auto& p : parts) {
    rep.rejections += p.rejections;
    for (auto& v : p.violations) rep.report.add(std::move(v));
  }
  return rep;
}

}  // namespace elr

// Serial reference against the OpenMP kernels: the pair scan of the planarity
// verifier and the sharded lemma oracle.

#include <map>

#include <benchmark/benchmark.h>

#include "elr/drawers.hpp"
#include "elr/generators.hpp"
#include "elr/metrics.hpp"

namespace {

using namespace elr;

struct Instance {
  TwoTree tree;
  Drawing drawing;
};

const Instance& instance(int n) {
  static std::map<int, Instance> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    TwoTree t = gen_random_2tree(n, 17);
    Drawing d = draw_2tree(t).drawing;
    it = cache.emplace(n, Instance{std::move(t), std::move(d)}).first;
  }
  return it->second;
}

void verify_planar(benchmark::State& state, Exec exec) {
  const Instance& in = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = verify_planar_straightline(in.tree.graph(), in.drawing, exec);
    benchmark::DoNotOptimize(r.ok);
  }
  state.counters["edges"] = in.tree.edge_count();
}

void oracle(benchmark::State& state, Exec exec) {
  for (auto _ : state) {
    auto r = lemma_oracle(Lemma::three, state.range(0), 5, exec);
    benchmark::DoNotOptimize(r.rejections);
  }
}

}  // namespace

BENCHMARK_CAPTURE(verify_planar, serial, Exec::serial)->Arg(500)->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify_planar, parallel, Exec::parallel)->Arg(500)->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle, serial, Exec::serial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle, parallel, Exec::parallel)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

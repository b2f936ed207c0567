#include <benchmark/benchmark.h>

#include "rainbow/count.hpp"
#include "rainbow/generate.hpp"

namespace {

rainbow::ColoredGraph make_instance(rainbow::Vertex n, double p) {
  rainbow::GenParams params;
  params.n = n;
  params.p = p;
  params.seed = 12345;
  return rainbow::random_colored_graph(params);
}

void BM_CountFast(benchmark::State& state) {
  auto g = make_instance(static_cast<rainbow::Vertex>(state.range(0)), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rainbow::count_rainbow_triangles_fast(g));
  }
}
BENCHMARK(BM_CountFast)->Arg(64)->Arg(256)->Arg(1024);

void BM_CountFastThreads(benchmark::State& state) {
  auto g = make_instance(1024, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rainbow::count_rainbow_triangles_fast(
        g, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_CountFastThreads)->Arg(1)->Arg(2)->Arg(4);

void BM_CountOracle(benchmark::State& state) {
  auto g = make_instance(static_cast<rainbow::Vertex>(state.range(0)), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rainbow::count_rainbow_triangles_oracle(g));
  }
}
BENCHMARK(BM_CountOracle)->Arg(64)->Arg(128);

void BM_Enumerate(benchmark::State& state) {
  auto g = make_instance(static_cast<rainbow::Vertex>(state.range(0)), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rainbow::enumerate_rainbow_triangles(g));
  }
}
BENCHMARK(BM_Enumerate)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();

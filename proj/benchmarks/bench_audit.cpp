#include <benchmark/benchmark.h>

#include "rainbow/audit.hpp"
#include "rainbow/distribution.hpp"
#include "rainbow/generate.hpp"

namespace {

rainbow::ColoredGraph triangle_rich_instance(rainbow::Vertex n) {
  rainbow::GenParams params;
  params.n = n;
  params.p = 0.6;
  params.seed = 99;
  return rainbow::random_colored_graph(params);
}

void BM_BuildJoint(benchmark::State& state) {
  auto g = triangle_rich_instance(static_cast<rainbow::Vertex>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rainbow::build_joint(g));
  }
}
BENCHMARK(BM_BuildJoint)->Arg(8)->Arg(10)->Arg(12);

void BM_AuditProof(benchmark::State& state) {
  auto g = triangle_rich_instance(static_cast<rainbow::Vertex>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rainbow::audit_proof(g));
  }
}
BENCHMARK(BM_AuditProof)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "stablegenus/expr_parser.hpp"
#include "stablegenus/polytope.hpp"
#include "stablegenus/signatures.hpp"
#include "stablegenus/stable_bounds.hpp"

using namespace stablegenus;

static void BM_StepFunctionFromSeifert(benchmark::State& state) {
  const SeifertMatrix v = seifert_matrix_torus(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stepfun_from_seifert(v));
}
BENCHMARK(BM_StepFunctionFromSeifert)->Arg(4)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_TorusJumpsClosedForm(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(torus_jumps(3, q));
}
BENCHMARK(BM_TorusJumpsClosedForm)->Arg(7)->Arg(31)->Arg(101);

static void BM_BallVertices4d(benchmark::State& state) {
  const std::vector<BasisKnot> basis{catalog("3_1"), catalog("5_1"), catalog("5_2"), catalog("6_2")};
  const HPolytope p = from_functionals(interval_functionals(basis), basis.size());
  for (auto _ : state) benchmark::DoNotOptimize(vertices(p));
}
BENCHMARK(BM_BallVertices4d)->Unit(benchmark::kMillisecond);

static void BM_UpperBoundLP(benchmark::State& state) {
  const KnotExpr e = parse_expr("5_1 - 2*6_2 + 3/2*5_2");
  const Registry& reg = default_registry();
  for (auto _ : state) benchmark::DoNotOptimize(upper_bound(e, reg));
}
BENCHMARK(BM_UpperBoundLP)->Unit(benchmark::kMillisecond);

static void BM_IntervalReport(benchmark::State& state) {
  const KnotExpr e = parse_expr("3*T(2,7) - 2*T(2,11)");
  const Registry& reg = default_registry();
  for (auto _ : state) benchmark::DoNotOptimize(g_st_interval(e, Category::smooth, reg));
}
BENCHMARK(BM_IntervalReport)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

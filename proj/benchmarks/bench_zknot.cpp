#include <benchmark/benchmark.h>

#include "zknot/generators.hpp"
#include "zknot/monodromy.hpp"
#include "zknot/shredding.hpp"
#include "zknot/zigzag.hpp"

using namespace zknot;

static void BM_AllZigzagsBipyramid(benchmark::State& state) {
  const Triangulation t = bipyramid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_zigzags(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllZigzagsBipyramid)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

static void BM_AllZigzagsTorus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Triangulation t = torus_grid(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(all_zigzags(t));
}
BENCHMARK(BM_AllZigzagsTorus)->Arg(5)->Arg(20)->Arg(50);

static void BM_MonodromyTable(benchmark::State& state) {
  const Triangulation t = random_sphere(7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(monodromy_table(t));
  state.counters["faces"] = static_cast<double>(t.face_count());
}
BENCHMARK(BM_MonodromyTable)->Arg(0)->Arg(5)->Arg(20);

static void BM_ShredIcosahedron(benchmark::State& state) {
  const Triangulation t = platonic(Platonic::Icosahedron);
  for (auto _ : state) benchmark::DoNotOptimize(shred(t));
}
BENCHMARK(BM_ShredIcosahedron)->Unit(benchmark::kMillisecond);

static void BM_ShredTorus(benchmark::State& state) {
  const Triangulation t = torus_grid(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(shred(t));
}
BENCHMARK(BM_ShredTorus)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "shapebasis/blocks.hpp"
#include "shapebasis/geometry.hpp"
#include "shapebasis/maximal.hpp"
#include "shapebasis/shape_law.hpp"

namespace {

using namespace shapebasis;

BlockConfig squares_config(int max_k) {
  std::vector<int> counts;
  for (int k = 0; k <= max_k; ++k) counts.push_back(std::max(1, k * k));
  return corollary_config(counts);
}

void BM_ClipRectangles(benchmark::State& state) {
  const ConvexPolygon a = rect_polygon(Rectangle({0, 0}, 0.0, 40, 2));
  const ConvexPolygon b = rect_polygon(Rectangle({0.3, 0.1}, 0.5, 40, 2));
  for (auto _ : state) benchmark::DoNotOptimize(clip_convex(a, b).area());
}
BENCHMARK(BM_ClipRectangles);

void BM_SolveSigma(benchmark::State& state) {
  const ShapeLawParams params(0.25, 9.0);
  const double theta = std::ldexp(1.0, -static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_sigma(params, theta));
}
BENCHMARK(BM_SolveSigma)->Arg(3)->Arg(10)->Arg(20);

void BM_UnionArea(benchmark::State& state) {
  const BlockFamily fam = build_family(squares_config(8), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(union_area(fam, {100000, 1, 1}).value);
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_UnionArea)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SuperlevelMeasure(benchmark::State& state) {
  const BlockFamily fam = build_family(squares_config(8), 6);
  const SamplingOptions opt{100000, 1, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        superlevel_measure(fam.as_family(), fam.test_function(), 0.2, fam.window(), opt).value);
  }
}
BENCHMARK(BM_SuperlevelMeasure)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "trigeo/circle.hpp"
#include "trigeo/congruence.hpp"
#include "trigeo/search.hpp"

namespace {

void BM_NgonTripleEnumeration(benchmark::State& state) {
  unsigned n = (unsigned)state.range(0);
  for (auto _ : state) {
    auto classes = trigeo::distinct_triangles_circle(trigeo::regular_ngon(n));
    benchmark::DoNotOptimize(classes.count());
  }
}
BENCHMARK(BM_NgonTripleEnumeration)->Arg(24)->Arg(60)->Arg(120);

void BM_Partitions3Count(benchmark::State& state) {
  std::uint64_t n = (std::uint64_t)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trigeo::partitions3_count(n));
  }
}
BENCHMARK(BM_Partitions3Count)->Arg(200)->Arg(2000);

void BM_GridMinSearch(benchmark::State& state) {
  auto grid = trigeo::GroundSet::rational_grid((int)state.range(0));
  for (auto _ : state) {
    auto r = trigeo::min_triangles(grid, 5);
    benchmark::DoNotOptimize(r.best_count);
  }
}
BENCHMARK(BM_GridMinSearch)->Arg(4)->Arg(5);

void BM_CircleMinSearch(benchmark::State& state) {
  auto circle = trigeo::GroundSet::circle_divisions((int)state.range(0), true);
  for (auto _ : state) {
    auto r = trigeo::min_triangles(circle, 6);
    benchmark::DoNotOptimize(r.best_count);
  }
}
BENCHMARK(BM_CircleMinSearch)->Arg(12)->Arg(20);

void BM_DistinctTrianglesRational(benchmark::State& state) {
  std::vector<trigeo::Point> pts;
  int k = (int)state.range(0);
  for (int y = 0; y < k; ++y)
    for (int x = 0; x < k; ++x)
      pts.push_back(trigeo::Point{trigeo::Rational(x), trigeo::Rational(y)});
  for (auto _ : state) {
    auto set = trigeo::distinct_triangles(pts);
    benchmark::DoNotOptimize(set.count());
  }
}
BENCHMARK(BM_DistinctTrianglesRational)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "z2n/dsl.hpp"
#include "z2n/extraction.hpp"
#include "z2n/random.hpp"

using namespace z2n;

namespace {

SeriesShape shape_for(int terms) {
  SeriesShape s;
  s.max_terms = static_cast<unsigned>(terms);
  s.max_x_degree = 3;
  s.max_weight = 4;
  s.max_poly_terms = 3;
  return s;
}

const Chart& bench_chart() {
  static const Chart c = sample_charts()[4];
  return c;
}

void BM_Multiply(benchmark::State& state) {
  Generator gen(1);
  const GradedSeries f = gen.series(bench_chart(), shape_for(static_cast<int>(state.range(0))));
  const GradedSeries g = gen.series(bench_chart(), shape_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(8)->Arg(32);

void BM_Apply(benchmark::State& state) {
  Generator gen(2);
  const DiffOperator d = gen.diff_operator(bench_chart(), static_cast<unsigned>(state.range(0)), shape_for(2));
  const GradedSeries f = gen.series(bench_chart(), shape_for(8));
  for (auto _ : state) benchmark::DoNotOptimize(apply(d, f));
}
BENCHMARK(BM_Apply)->DenseRange(0, 3);

void BM_Extraction(benchmark::State& state) {
  Generator gen(3);
  const int k = static_cast<int>(state.range(0));
  const DiffOperator d = gen.diff_operator(bench_chart(), static_cast<unsigned>(k), shape_for(2));
  ExtractionOptions opts;
  opts.battery = 10;
  for (auto _ : state) benchmark::DoNotOptimize(extract_coefficients(closure(d), k, opts));
}
BENCHMARK(BM_Extraction)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Pullback(benchmark::State& state) {
  Generator gen(4);
  const auto charts = sample_charts();
  SeriesShape images = shape_for(2);
  images.max_x_degree = 2;
  images.max_weight = 2;
  const MorphismSpec phi = gen.morphism(charts[4], charts[5], images);
  const GradedSeries f = gen.series(charts[5], shape_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(pullback(phi, f));
}
BENCHMARK(BM_Pullback)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Rho(benchmark::State& state) {
  Generator gen(5);
  const GradedSeries f = gen.series(bench_chart(), shape_for(8));
  const SeminormSpec rho = SeminormSpec::rho(CompactBox::cube(1, 2, static_cast<unsigned>(state.range(0))), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(eval_seminorm(rho, f));
}
BENCHMARK(BM_Rho)->Arg(9)->Arg(33);

}  // namespace

BENCHMARK_MAIN();

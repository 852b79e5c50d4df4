#include <cmath>

#include <benchmark/benchmark.h>

#include "umbral/umbral.hpp"

namespace {

void bench_sg(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 4;
  for (auto _ : state) benchmark::DoNotOptimize(umbral::sg(x));
}
BENCHMARK(bench_sg)->Arg(2)->Arg(10)->Arg(40);

void bench_dawson(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 4;
  for (auto _ : state) benchmark::DoNotOptimize(umbral::dawson(x));
}
BENCHMARK(bench_dawson)->Arg(2)->Arg(10)->Arg(40);

void bench_sg_derivative(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(umbral::sg_derivative(static_cast<unsigned>(state.range(0)), 1.3));
}
BENCHMARK(bench_sg_derivative)->Arg(1)->Arg(4)->Arg(8);

void bench_quasi_gauss(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(umbral::quasi_gauss(x, 3));
}
BENCHMARK(bench_quasi_gauss)->Arg(1)->Arg(4)->Arg(20);

void bench_levy_density(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(umbral::levy_density(x, 0.7));
}
BENCHMARK(bench_levy_density)->Arg(1)->Arg(10);

void bench_fresnel(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(umbral::fresnel_point(x));
}
BENCHMARK(bench_fresnel)->Arg(1)->Arg(8)->Arg(40);

void bench_hyp1f1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(umbral::hyp1f1(0.5, 1.5, 4.0).value);
}
BENCHMARK(bench_hyp1f1);

void bench_whole_line_quad(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(umbral::quad::whole_line_quad([](double x) { return 1 / (1 + x * x); }).value);
  }
}
BENCHMARK(bench_whole_line_quad);

} // namespace

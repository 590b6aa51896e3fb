#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "mms/gradient.hpp"

namespace {

void BM_gradient_field_line(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double delta = 2.0 * std::numbers::pi / (n - 1);
  const auto grid = mms::MetricSpace::grid(1, {n}, delta);
  mms::PointFunction f;
  f.values.resize(n);
  for (int i = 0; i < n; ++i) f.values[i] = std::sin(grid->coord(i, 0));
  const mms::HFunction h(2.0);
  mms::GradientFieldOptions opts;
  opts.jobs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mms::gradient_field(grid, f, h, opts).values);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_gradient_field_line)->Arg(64)->Arg(128)->Arg(256)->Complexity();

void BM_probe_estimate(benchmark::State& state) {
  const int n = 128;
  const double delta = 2.0 * std::numbers::pi / (n - 1);
  const auto grid = mms::MetricSpace::grid(1, {n}, delta);
  mms::PointFunction f;
  f.values.resize(n);
  for (int i = 0; i < n; ++i) f.values[i] = std::sin(grid->coord(i, 0));
  const auto F = mms::MeasureFunctional::induced(f);
  const mms::HFunction h(2.0);
  const auto ens = mms::grid_probe_ensemble(grid, n / 2, 2 * delta,
                                            {delta, 2 * delta, 4 * delta}, h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mms::upper_gradient_estimate(F, ens.anchor, ens));
  }
}
BENCHMARK(BM_probe_estimate);

}  // namespace

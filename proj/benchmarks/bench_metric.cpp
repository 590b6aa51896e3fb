#include <benchmark/benchmark.h>

#include "mms/metric.hpp"
#include "mms/rng.hpp"
#include "mms/transport.hpp"

namespace {

mms::SpacePtr planar_space(int n, std::uint64_t seed) {
  mms::Rng rng(seed);
  std::vector<std::vector<double>> coords(n, std::vector<double>(2));
  for (auto& c : coords) {
    c[0] = rng.uniform();
    c[1] = rng.uniform();
  }
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dx = coords[i][0] - coords[j][0];
      const double dy = coords[i][1] - coords[j][1];
      dist[i][j] = dist[j][i] = std::max(std::sqrt(dx * dx + dy * dy), 1e-6);
    }
  std::vector<double> w(n, 1.0);
  return mms::MetricSpace::from_matrix(dist, w, coords);
}

mms::Measure random_measure(const mms::SpacePtr& sp, std::uint64_t seed) {
  mms::Rng rng(seed);
  std::vector<double> phi(sp->size());
  for (double& v : phi) v = rng.uniform();
  return mms::Measure(sp, std::move(phi));
}

void BM_dm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sp = planar_space(n, 42);
  const mms::Measure a = random_measure(sp, 1);
  const mms::Measure b = random_measure(sp, 2);
  const mms::HFunction h(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mms::dm(a, b, h));
  }
}
BENCHMARK(BM_dm)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_matched_mass(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sp = planar_space(n, 7);
  const mms::Measure a = random_measure(sp, 3);
  const mms::Measure b = random_measure(sp, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mms::max_matched_mass(a, b, 0.3).mass);
  }
}
BENCHMARK(BM_matched_mass)->Arg(16)->Arg(64)->Arg(128);

void BM_dm_bruteforce(benchmark::State& state) {
  const auto sp = planar_space(5, 11);
  const mms::Measure a = random_measure(sp, 5);
  const mms::Measure b = random_measure(sp, 6);
  const mms::HFunction h(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mms::dm_bruteforce(a, b, h));
  }
}
BENCHMARK(BM_dm_bruteforce);

}  // namespace

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "robustwald/models.hpp"
#include "robustwald/robustness.hpp"

using namespace rw;

namespace {

std::vector<Vector> gaussian_sample(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vector> data;
  data.reserve(n);
  for (int i = 0; i < n; ++i) data.push_back({gauss(rng)});
  return data;
}

void BM_Integrate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(
        [](double x) { return std::exp(-0.5 * x * x); }, {-kInf, kInf}));
  }
}
BENCHMARK(BM_Integrate);

void BM_FitLocation(benchmark::State& state) {
  auto model = std::make_shared<NormalLocationModel>(1.0);
  const auto data = gaussian_sample(static_cast<int>(state.range(0)), 7);
  FitOptions opts;
  opts.compute_matrices = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit(model, data, 0.5, std::nullopt, opts));
  }
}
BENCHMARK(BM_FitLocation)->Arg(100)->Arg(500);

void BM_NoncentralSf(benchmark::State& state) {
  const double crit = chisq_quantile(0.05, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(noncentral_chisq_sf(crit, {1, 7.5}));
  }
}
BENCHMARK(BM_NoncentralSf);

void BM_PowerCell(benchmark::State& state) {
  const WeibullShapeModel wb;
  ContiguousSpec spec;
  spec.d = Vector{2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(contiguous_power(wb, {1.0}, nullptr, 0.5, spec));
  }
}
BENCHMARK(BM_PowerCell);

void BM_InfluenceGrid(benchmark::State& state) {
  auto wb = std::make_shared<WeibullShapeModel>();
  const NullContext ctx = make_null_context(wb, {1.0}, 0.5, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(influence_grid(ctx, nullptr, nullptr));
  }
}
BENCHMARK(BM_InfluenceGrid);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <filesystem>
#include <memory>
#include <random>
#include <vector>

#include "ivalid/error_objective.hpp"
#include "ivalid/estimators/mlp.hpp"
#include "ivalid/moore_skelboe.hpp"
#include "ivalid/scenario.hpp"

using namespace ivalid;

namespace {

const std::filesystem::path kData = IVALID_DATA_DIR;

std::vector<Interval> random_intervals(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10, 10);
  std::vector<Interval> v;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = u(rng), b = u(rng);
    v.emplace_back(std::min(a, b), std::max(a, b));
  }
  return v;
}

void BM_IntervalMul(benchmark::State& state) {
  const auto v = random_intervals(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(v[i & 1023] * v[(i + 1) & 1023]);
    ++i;
  }
}
BENCHMARK(BM_IntervalMul);

void BM_IntervalSqrt(benchmark::State& state) {
  auto v = random_intervals(1024);
  for (auto& x : v) x = sqr(x);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sqrt(v[i++ & 1023]));
}
BENCHMARK(BM_IntervalSqrt);

void BM_AffineDot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = random_intervals(n);
  const std::vector<double> w(n, 0.37);
  for (auto _ : state) benchmark::DoNotOptimize(affine_dot(w, x, 0.5));
}
BENCHMARK(BM_AffineDot)->Arg(3)->Arg(32);

ErrorObjective scenario_objective(const char* file) {
  return build_objective(load_scenario(kData / file));
}

void BM_FixtureMlpBox(benchmark::State& state) {
  const MlpModel m = mlp_load(kData / "trilateration_mlp.json");
  const IntervalBox y{Interval(15, 16), Interval(10, 11), Interval(28, 29)};
  for (auto _ : state) benchmark::DoNotOptimize(m.forward(y));
}
BENCHMARK(BM_FixtureMlpBox);

void BM_ObjectiveBox(benchmark::State& state, const char* file) {
  const ErrorObjective obj = scenario_objective(file);
  const IntervalBox b = concat(IntervalBox{Interval(14, 15), Interval(14, 15)}, obj.noise_box());
  for (auto _ : state) benchmark::DoNotOptimize(obj.objective_box(b));
}
BENCHMARK_CAPTURE(BM_ObjectiveBox, gd, "range_gd.json");
BENCHMARK_CAPTURE(BM_ObjectiveBox, mlp, "range_mlp.json");

void BM_MooreSkelboeGd(benchmark::State& state) {
  const ErrorObjective obj = scenario_objective("range_gd.json");
  const MsConfig cfg{1e-2, static_cast<std::size_t>(state.range(0)), obj.split_dims()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(moore_skelboe(
        [&obj](const IntervalBox& b) { return obj.objective_box(b); }, obj.search_box(), cfg));
  }
}
BENCHMARK(BM_MooreSkelboeGd)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

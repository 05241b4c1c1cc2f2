#include <benchmark/benchmark.h>

#include <cstdint>

#include "ulc/ulc.hpp"

namespace {

void BM_BennettH(benchmark::State& state) {
  double x = -0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ulc::bennett_h(x));
    x = x > 40.0 ? -0.9 : x + 0.37;
  }
}
BENCHMARK(BM_BennettH);

void BM_BennettHSeries(benchmark::State& state) {
  double x = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ulc::bennett_h(x));
    x = x > 9e-5 ? 1e-6 : x * 1.1;
  }
}
BENCHMARK(BM_BennettHSeries);

void BM_Psi(benchmark::State& state) {
  const auto l = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ulc::log_psi(2, l, 7.5));
  }
}
BENCHMARK(BM_Psi)->Arg(30)->Arg(300)->Arg(3000);

void BM_Convolve(benchmark::State& state) {
  const auto support = state.range(0);
  const auto a = ulc::make_binomial(support, 0.3);
  const auto b = ulc::make_binomial(support, 0.55);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ulc::convolve(a, b));
  }
}
BENCHMARK(BM_Convolve)->Arg(40)->Arg(400);

void BM_IntrinsicVolumesBox(benchmark::State& state) {
  std::vector<double> sides;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    sides.push_back(0.5 + 0.01 * static_cast<double>(i));
  }
  const ulc::ConvexBody box = ulc::Box{sides};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ulc::intrinsic_volumes(box));
  }
}
BENCHMARK(BM_IntrinsicVolumesBox)->Arg(10)->Arg(100)->Arg(1000);

void BM_IntrinsicVolumesBall(benchmark::State& state) {
  const ulc::ConvexBody ball = ulc::Ball{1.0, state.range(0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ulc::intrinsic_volumes(ball));
  }
}
BENCHMARK(BM_IntrinsicVolumesBall)->Arg(15)->Arg(150);

void BM_ChernoffOracle(benchmark::State& state) {
  const auto pmf = ulc::make_truncated_poisson(5.0, 0, 140);
  const ulc::ChernoffGrid grid{.points = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ulc::chernoff_upper_oracle(pmf, 5.0, grid));
  }
}
BENCHMARK(BM_ChernoffOracle)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_MgfDomination(benchmark::State& state) {
  const auto grid = ulc::default_t_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ulc::verify_mgf_domination({2.0, 3, 30}, grid));
  }
}
BENCHMARK(BM_MgfDomination);

void BM_RandomUlc(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ulc::random_ulc(seed++, 40));
  }
}
BENCHMARK(BM_RandomUlc);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "heightmap/npmle.hpp"
#include "heightmap/simbench.hpp"
#include "heightmap/sweep2d.hpp"
#include "heightmap/sweepnd.hpp"

namespace {

using namespace heightmap;

// Canonicalization plus sweep on current-status data, cliques off.
void BM_Reduce2d(benchmark::State& state) {
  const auto boxes = gen_current_status(static_cast<std::size_t>(state.range(0)), 20050101);
  for (auto _ : state) {
    const auto canon = canonicalize(boxes);
    benchmark::DoNotOptimize(reduce2d(canon.boxes, ReduceOptions{false}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reduce2d)->RangeMultiplier(2)->Range(256, 8192)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Canonicalize(benchmark::State& state) {
  const auto boxes = gen_current_status(static_cast<std::size_t>(state.range(0)), 20050101);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(boxes));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Canonicalize)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNLogN);

void BM_Reduce2dWithCliques(benchmark::State& state) {
  const auto canon = canonicalize(gen_current_status(static_cast<std::size_t>(state.range(0)), 20050101));
  for (auto _ : state) benchmark::DoNotOptimize(reduce2d(canon.boxes));
}
BENCHMARK(BM_Reduce2dWithCliques)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_ReduceNd3(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<ObservationBox> boxes;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Interval> axes;
    for (int a = 0; a < 3; ++a) {
      const double lo = u(rng);
      axes.emplace_back(lo, lo + 0.3 * u(rng) + 1e-6);
    }
    boxes.emplace_back(std::move(axes));
  }
  const auto canon = canonicalize(boxes);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_nd(canon.boxes, 3, ReduceOptions{false}));
}
BENCHMARK(BM_ReduceNd3)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_LogLikelihood(benchmark::State& state) {
  const auto canon = canonicalize(gen_current_status(static_cast<std::size_t>(state.range(0)), 7));
  const auto maxima = reduce2d(canon.boxes);
  const CliqueMatrix c = clique_matrix(maxima, canon.boxes);
  const MassVector alpha(std::vector<double>(c.rows(), 1.0 / static_cast<double>(c.rows())));
  for (auto _ : state) benchmark::DoNotOptimize(log_likelihood(c, alpha));
}
BENCHMARK(BM_LogLikelihood)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();

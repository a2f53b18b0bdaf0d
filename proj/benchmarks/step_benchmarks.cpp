#include <benchmark/benchmark.h>

#include <numbers>

#include "boltzslice/boltzslice.hpp"

using namespace boltzslice;

namespace {

void BM_SamplerStep(benchmark::State& state, ObjectiveId id, SamplerKind kind, double kappa) {
  auto sampler = make_sampler(id, kind, EnergyLevel(kappa), default_start(id), 0.3);
  auto rng = derive_stream(1, 0);
  StepDiagnostics diag;
  for (auto _ : state) benchmark::DoNotOptimize(sampler->step(rng, diag));
  state.SetItemsProcessed(state.iterations());
}

BENCHMARK_CAPTURE(BM_SamplerStep, rosenbrock_k5000, ObjectiveId::rosenbrock, SamplerKind::slice, 5000.0);
BENCHMARK_CAPTURE(BM_SamplerStep, himmelblau_k1, ObjectiveId::himmelblau, SamplerKind::slice, 1.0);
BENCHMARK_CAPTURE(BM_SamplerStep, rastrigin_k5, ObjectiveId::rastrigin, SamplerKind::slice, 5.0);
BENCHMARK_CAPTURE(BM_SamplerStep, shubert_k1, ObjectiveId::shubert, SamplerKind::slice, 1.0);
BENCHMARK_CAPTURE(BM_SamplerStep, michalewicz_generic_k5, ObjectiveId::michalewicz, SamplerKind::slice, 5.0);
BENCHMARK_CAPTURE(BM_SamplerStep, rastrigin_metropolis_k05, ObjectiveId::rastrigin, SamplerKind::metropolis, 0.5);

void BM_TruncatedNormalUnion(benchmark::State& state) {
  const auto u = solve_cosine(2.0 * std::numbers::pi, 0.0, 0.3, CosineSide::ge, {-5.12, 5.12});
  auto rng = derive_stream(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_truncated_normal_union(0.0, 0.1, u, rng));
}
BENCHMARK(BM_TruncatedNormalUnion);

void BM_TruncatedNormalDeepTail(benchmark::State& state) {
  const IntervalUnion u{{50.0, 51.0}};
  auto rng = derive_stream(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_truncated_normal_union(0.0, 1.0, u, rng));
}
BENCHMARK(BM_TruncatedNormalDeepTail);

void BM_ShubertRegion(benchmark::State& state) {
  const std::array<double, 5> y{0.5, -1.0, 2.0, 0.3, 4.0};
  for (auto _ : state) benchmark::DoNotOptimize(shubert_region(-3.7, y));
}
BENCHMARK(BM_ShubertRegion);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "pseirs/dde.hpp"
#include "pseirs/integro.hpp"
#include "pseirs/netgen.hpp"
#include "pseirs/sir.hpp"
#include "pseirs/threshold.hpp"

namespace {

pseirs::PseirsParams canonical() {
  return {.beta = 0.33, .mu = 0.006, .epsilon = 0.06, .alpha = 0.04,
          .gamma = 0.308, .omega = 0.15, .tau = 30.0, .p = 1.0};
}

void BM_SirLowContact(benchmark::State& state) {
  for (auto _ : state) {
    auto traj = pseirs::sir::simulate({0.06, 0.1}, {11.0, 1.0, 0.0}, 200.0, 0.01);
    benchmark::DoNotOptimize(traj);
  }
}
BENCHMARK(BM_SirLowContact)->Unit(benchmark::kMillisecond);

void BM_PseirsCanonical(benchmark::State& state) {
  const auto params = pseirs::validate_pseirs(canonical());
  const auto history = pseirs::HistoryFunction::constant(63.0, 7.0);
  const double horizon = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto traj = pseirs::dde::simulate(params, history, horizon, pseirs::dde::default_step(canonical()));
    benchmark::DoNotOptimize(traj);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(horizon / pseirs::dde::default_step(canonical())));
}
BENCHMARK(BM_PseirsCanonical)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Equivalence(benchmark::State& state) {
  const auto traj = pseirs::dde::simulate(pseirs::validate_pseirs(canonical()),
                                          pseirs::HistoryFunction::constant(63.0, 7.0), 300.0,
                                          pseirs::dde::default_step(canonical()));
  for (auto _ : state) {
    auto report = pseirs::integro::verify_equivalence(traj, canonical(), 20);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_Equivalence)->Unit(benchmark::kMillisecond);

void BM_StabilityProbe(benchmark::State& state) {
  auto params = canonical();
  params.omega = 30.0;
  const double horizon = pseirs::threshold::min_probe_horizon(params);
  for (auto _ : state) {
    auto probe = pseirs::threshold::stability_probe(params, horizon);
    benchmark::DoNotOptimize(probe);
  }
}
BENCHMARK(BM_StabilityProbe)->Unit(benchmark::kMillisecond);

void BM_BarabasiAlbert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto g = pseirs::netgen::generate_ba(n, 3, 2, ++seed);
    benchmark::DoNotOptimize(g);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BarabasiAlbert)->Arg(5000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

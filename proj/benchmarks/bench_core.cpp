#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "fedaloha/access.hpp"
#include "fedaloha/channel.hpp"
#include "fedaloha/sim.hpp"

using namespace fedaloha;

static void BM_ResolveSlot(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    std::vector<TransmissionAttempt> attempts;
    for (UserId u = 0; u < n; ++u) attempts.push_back({u, choose_channel(10, rng)});
    for (auto _ : state) benchmark::DoNotOptimize(resolve_slot(attempts, 10).successes());
}
BENCHMARK(BM_ResolveSlot)->Arg(10)->Arg(100)->Arg(600);

static void BM_SolveCentralized(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    std::vector<double> a(k);
    for (double& v : a) v = std::exp(rng.normal());
    for (auto _ : state) benchmark::DoNotOptimize(solve_centralized(a, 10).log_lambda);
}
BENCHMARK(BM_SolveCentralized)->Arg(100)->Arg(1000);

static void BM_GenieSelect(benchmark::State& state) {
    Rng rng(3);
    const auto inst = generate_instance(100, 10, rng);
    const WeightVector w(10);
    for (auto _ : state) benchmark::DoNotOptimize(genie_select(inst, w));
}
BENCHMARK(BM_GenieSelect);

// One full Fig. 2-scale run (K=1000, M=10, L=10) for 100 iterations.
static void BM_Run(benchmark::State& state) {
    SimConfig c;
    c.policy = static_cast<Policy>(state.range(0));
    c.p_comp = 0.6;
    c.horizon = 100;
    for (auto _ : state) benchmark::DoNotOptimize(run(c).final_w);
}
BENCHMARK(BM_Run)
    ->Arg(static_cast<int>(Policy::Polling))
    ->Arg(static_cast<int>(Policy::EqualAloha))
    ->Arg(static_cast<int>(Policy::AdaptiveAloha))
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

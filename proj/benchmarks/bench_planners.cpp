#include <benchmark/benchmark.h>

#include "pomdplite/domains/battleship.hpp"
#include "pomdplite/domains/rocksample.hpp"
#include "pomdplite/uct.hpp"

using namespace pomdplite;

static void BM_UctRockSample78(benchmark::State& state) {
    auto model = make_rocksample(7, 8);
    Belief b = Belief::exact_prior(*model);
    AugState s = initial_aug_state(*model);
    PlannerConfig cfg;
    cfg.beta = 1.0;
    cfg.uct_simulations = state.range(0);
    Rng rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(uct_plan(*model, b, s, cfg, rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_UctRockSample78)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_UctBattleship105(benchmark::State& state) {
    auto model = make_battleship(10, 5);
    Rng prior_rng(11);
    Belief b = Belief::particle_prior(*model, 10000, prior_rng);
    AugState s = initial_aug_state(*model);
    PlannerConfig cfg;
    cfg.beta = 1.0;
    cfg.uct_simulations = state.range(0);
    Rng rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(uct_plan(*model, b, s, cfg, rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_UctBattleship105)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_BattleshipConsistentLayout(benchmark::State& state) {
    auto model = make_battleship(10, 5);
    Rng rng(3);
    // Mid-game evidence: a few hits and misses from a reference layout.
    Theta truth = model->sample_hidden_prior(rng);
    std::vector<EvidenceStep> evidence;
    AugState s = initial_aug_state(*model);
    for (int cell = 0; cell < 30; ++cell) {
        ActionList acts;
        model->legal_actions(s, acts);
        Action a = acts[rng.uniform_int(acts.size())];
        StepResult step = sample_step(*model, truth, s, a, rng);
        evidence.push_back({s, a, step.next});
        s = step.next;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(model->sample_hidden_consistent(evidence, rng));
    }
}
BENCHMARK(BM_BattleshipConsistentLayout);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "pomdplite/belief_ops.hpp"
#include "pomdplite/domains/rocksample.hpp"
#include "pomdplite/domains/tiger.hpp"

using namespace pomdplite;

static void BM_BayesUpdateTiger(benchmark::State& state) {
    auto model = make_tiger();
    Belief b = Belief::exact_prior(*model);
    AugState s = initial_aug_state(*model);
    AugState next{bits_of(0), tiger::kObsTigerLeft};
    for (auto _ : state) {
        Belief b2 = bayes_update(*model, b, s, tiger::kListen, next);
        benchmark::DoNotOptimize(b2);
    }
}
BENCHMARK(BM_BayesUpdateTiger);

static void BM_RewardBonusRockSample(benchmark::State& state) {
    auto model = make_rocksample(7, 8);
    Belief b = Belief::exact_prior(*model);
    AugState s = initial_aug_state(*model);
    const Action sense0 = RockSampleModel::sense_action(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reward_bonus(*model, b, s, sense0, 1.0));
    }
}
BENCHMARK(BM_RewardBonusRockSample);

static void BM_InternalRewardContextRockSample(benchmark::State& state) {
    auto model = make_rocksample(7, 8);
    Belief b = Belief::exact_prior(*model);
    AugState s = initial_aug_state(*model);
    InternalRewardModel irm(*model, b, 1.0);
    const Action sense0 = RockSampleModel::sense_action(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(irm.internal_reward(s, sense0));
    }
}
BENCHMARK(BM_InternalRewardContextRockSample);

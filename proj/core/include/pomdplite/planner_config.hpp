#pragma once

#include <cstdint>

#include "pomdplite/belief_ops.hpp"

namespace pomdplite {

enum class PlanEngine { Vi, Uct };

struct PlannerConfig {
    double beta = 1.0;

    // Exact solver.
    double vi_tolerance = 1e-6;  // Bellman residual, sup norm
    int vi_max_iters = 100000;
    std::size_t vi_state_cap = 2'000'000;

    // UCT. Exactly one of the two budgets is active: a positive
    // time_budget_ms takes precedence, otherwise uct_simulations is used.
    double uct_exploration_c = 0.0;  // 0 = take the model's suggestion
    std::int64_t uct_simulations = 10'000;
    std::int64_t time_budget_ms = 0;
    int rollout_depth_cap = 0;  // 0 = take the model's suggestion
    bool theta_persistence = false;  // ablation: one theta draw per simulation

    PlanEngine engine = PlanEngine::Uct;
    std::uint64_t seed = 1;

    // Bayes-optimal oracle.
    int oracle_horizon = 10;
    std::size_t oracle_node_cap = 5'000'000;

    // Belief representation.
    int particle_count = 10'000;
    std::int64_t exact_belief_threshold = kExactBeliefThreshold;

    BonusConfig bonus;

    double exploration_for(const Model& m) const {
        return uct_exploration_c > 0.0 ? uct_exploration_c : m.suggested_exploration();
    }
    int depth_cap_for(const Model& m) const {
        return rollout_depth_cap > 0 ? rollout_depth_cap : m.suggested_depth_cap();
    }
};

}  // namespace pomdplite

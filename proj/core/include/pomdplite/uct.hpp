#pragma once

#include <vector>

#include "pomdplite/planner_config.hpp"

namespace pomdplite {

struct UctRootArm {
    Action action;
    double mean;
    std::int64_t visits;
};

/// UCT on the frozen-belief internal-reward MDP. Each simulated step draws
/// theta ~ b independently (realizing the mean transition) and accrues the
/// internal reward computed from the root belief. Returns the root action
/// with the best visit-weighted value, ties broken by lowest action index.
/// Deterministic for a fixed seed under a simulation-count budget.
Action uct_plan(const Model& model, const Belief& belief, const AugState& s,
                const PlannerConfig& cfg, Rng& rng,
                std::vector<UctRootArm>* root_stats = nullptr);

}  // namespace pomdplite

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pomdplite/belief_ops.hpp"

namespace pomdplite {

struct BeliefSummary {
    double max_weight = 0.0;
    double entropy = 0.0;
    double ess = 0.0;
};

struct EpisodeStep {
    AugState s;
    Action a = -1;
    double reward = 0.0;
    AugState next;
    BeliefSummary belief_after;
};

struct EpisodeRecord {
    std::uint64_t seed = 0;
    std::int64_t theta_true_index = -1;  // -1 when the prior is generative
    Theta theta_true;
    std::vector<EpisodeStep> steps;
    double discounted_return = 0.0;
    double wall_ms_per_step = 0.0;
    bool reached_terminal = false;
    std::string error;  // nonempty when the episode aborted
};

/// A planner: maps (belief, state) to an action. Owns its own random source.
using PolicyFn = std::function<Action(const Belief&, const AugState&)>;

struct AgentOptions {
    int particle_count = 10'000;
    std::int64_t exact_belief_threshold = kExactBeliefThreshold;
    /// Resample a particle belief when ESS drops below this fraction of the
    /// particle count.
    double resample_fraction = 0.1;
    /// Seed for belief construction/resampling draws.
    std::uint64_t belief_seed = 0xbe11efULL;
};

/// The online control loop: plan greedily, execute, update the belief,
/// repeat until a terminal state or max_steps. The true hidden value evolves
/// through the model dynamics. Particle depletion triggers the model's
/// evidence-conditioned resampler when available, bootstrap resampling
/// otherwise.
EpisodeRecord run_agent_loop(const Model& model, const Theta& theta_true,
                             const PolicyFn& policy, int max_steps, Rng& env_rng,
                             const AgentOptions& opts = {});

EpisodeRecord run_agent_loop(const Model& model, std::int64_t theta_true_index,
                             const PolicyFn& policy, int max_steps, Rng& env_rng,
                             const AgentOptions& opts = {});

/// Recomputes sum of gamma^t * r_t from the recorded steps.
double recompute_discounted_return(const Model& model, const EpisodeRecord& rec);

}  // namespace pomdplite

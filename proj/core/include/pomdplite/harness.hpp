#pragma once

#include <iosfwd>
#include <optional>

#include "pomdplite/agent.hpp"
#include "pomdplite/baselines.hpp"
#include "pomdplite/oracle.hpp"

namespace pomdplite {

enum class PlannerId { PomdpLite, MeanMdp, Qmdp, Random, Oracle };

std::string planner_name(PlannerId id);
std::optional<PlannerId> planner_from_name(const std::string& name);

/// A (belief, state) -> action policy plus a human-readable description.
/// Heavy offline work (QMDP per-theta solves) happens once, in make_policy.
struct Policy {
    PolicyFn act;
    std::string description;
};

/// Builds the policy for one episode. `rng` seeds the planner's private
/// random stream; the environment stream stays separate.
Policy make_policy(const Model& model, PlannerId id, const PlannerConfig& cfg, Rng rng);

struct RunOptions {
    int max_steps = 1000;
    int threads = 0;  // 0 = hardware concurrency
    AgentOptions agent;
};

struct RunSummary {
    std::string domain;
    std::string planner;
    double beta = 0.0;
    int episodes = 0;
    double mean_return = 0.0;
    double stderr_ = 0.0;
    /// Fraction of episodes ending in a terminal state with positive final
    /// reward; meaningful for domains with a success-style terminal payoff.
    double success_rate = 0.0;
    double total_wall_ms = 0.0;
    int error_count = 0;

    bool operator==(const RunSummary&) const = default;
};

struct RunResult {
    RunSummary summary;
    std::vector<EpisodeRecord> records;
};

/// Seeded benchmark run: theta_true ~ prior per episode, per-episode planner
/// and environment streams derived deterministically from master_seed, so
/// results are reproducible and episodes may execute concurrently. Episode
/// failures are recorded per episode (and counted), never silently dropped.
RunResult run_episodes(const Model& model, PlannerId id, const PlannerConfig& cfg,
                       int episodes, std::uint64_t master_seed, const RunOptions& opts = {});

/// Mean, standard error (sample sd / sqrt(n)) and success rate over records.
RunSummary summarize(const Model& model, std::span<const EpisodeRecord> records);

/// One CSV row per episode: seed, theta_true, steps, return, ms per step.
void write_episodes_csv(std::ostream& os, std::span<const EpisodeRecord> records);

void write_summary_json(std::ostream& os, const RunSummary& summary);
RunSummary read_summary_json(std::istream& is);

}  // namespace pomdplite

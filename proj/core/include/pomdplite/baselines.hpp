#pragma once

#include <vector>

#include "pomdplite/uct.hpp"
#include "pomdplite/value_iteration.hpp"

namespace pomdplite {

/// Per-theta optimal Q tables, combined as Q(b,s,a) = sum_i b(i) Q*_i(s,a).
/// Solved offline by value iteration on each indexed MDP; tabular,
/// enumerable-theta models only.
class QmdpSolution {
public:
    static QmdpSolution solve(const Model& model, double tolerance = 1e-9,
                              int max_iters = 1'000'000, std::size_t state_cap = 200'000);

    double combined_q(const Belief& b, const AugState& s, Action a) const;

    /// argmax_a of combined_q with lowest-index ties.
    Action policy(const Belief& b, const AugState& s) const;

    /// sum_i b(i) * V*_i(s) — the classical optimism bound on the Bayes value.
    double combined_value(const Belief& b, const AugState& s) const;

    const ValueTable& table(std::size_t theta_index) const { return tables_[theta_index]; }

private:
    const Model* model_ = nullptr;
    std::vector<ValueTable> tables_;  // one per hidden value
};

/// The beta = 0 restriction of the internal-reward planner; shares the
/// planner code paths exactly.
Action mean_mdp_policy(const Model& model, const Belief& b, const AugState& s,
                       const PlannerConfig& cfg, Rng& rng);

/// The full internal-reward planner (VI or UCT engine per cfg).
Action pomdplite_policy(const Model& model, const Belief& b, const AugState& s,
                        const PlannerConfig& cfg, Rng& rng);

/// Uniform over legal actions.
Action random_policy(const Model& model, const AugState& s, Rng& rng);

}  // namespace pomdplite

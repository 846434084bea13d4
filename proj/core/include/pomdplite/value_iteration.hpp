#pragma once

#include <unordered_map>
#include <vector>

#include "pomdplite/planner_config.hpp"

namespace pomdplite {

/// Q and V tables over augmented states. v(s) = max over legal a of q(s, a).
class ValueTable {
public:
    struct Entry {
        ActionList actions;
        std::vector<double> q;  // parallel to actions
    };

    bool contains(const AugState& s) const { return table_.find(s) != table_.end(); }
    double value(const AugState& s) const;
    double q_value(const AugState& s, Action a) const;

    /// Greedy action, ties broken by lowest action index. StateError on
    /// terminal/unknown states.
    Action greedy(const AugState& s) const;

    const std::unordered_map<AugState, Entry, AugStateHash>& entries() const { return table_; }
    std::unordered_map<AugState, Entry, AugStateHash>& entries() { return table_; }

    int iterations = 0;
    double residual = 0.0;

private:
    std::unordered_map<AugState, Entry, AugStateHash> table_;
};

/// Solves the frozen-belief internal-reward MDP by value iteration over the
/// augmented states reachable from `start` (the model's initial state by
/// default). The belief is never updated inside the recursion.
/// Throws ConvergenceError when the residual does not reach cfg.vi_tolerance.
ValueTable solve_internal_vi(const Model& model, const Belief& belief,
                             const PlannerConfig& cfg);
ValueTable solve_internal_vi(const Model& model, const Belief& belief,
                             const PlannerConfig& cfg, const AugState& start);

/// Plain value iteration on one indexed MDP (known theta), same conventions.
ValueTable solve_mdp_vi(const IndexedMdpView& mdp, const AugState& start, double tolerance,
                        int max_iters, std::size_t state_cap = 2'000'000);

}  // namespace pomdplite

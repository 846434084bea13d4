#include "pomdplite/baselines.hpp"

#include <limits>

namespace pomdplite {

QmdpSolution QmdpSolution::solve(const Model& model, double tolerance, int max_iters,
                                 std::size_t state_cap) {
    const std::int64_t n = model.num_hidden_values();
    if (n < 1)
        throw UnsupportedError(model.name() +
                               ": QMDP needs enumerable per-theta MDPs (tabular domains only)");
    QmdpSolution sol;
    sol.model_ = &model;
    sol.tables_.reserve(static_cast<std::size_t>(n));
    const AugState start = initial_aug_state(model);
    for (std::int64_t i = 0; i < n; ++i)
        sol.tables_.push_back(
            solve_mdp_vi(indexed_mdp_view(model, i), start, tolerance, max_iters, state_cap));
    return sol;
}

double QmdpSolution::combined_q(const Belief& b, const AugState& s, Action a) const {
    if (!b.is_exact() || b.size() != tables_.size())
        throw ArgumentError("QmdpSolution: belief must be exact over the solved hidden space");
    double q = 0.0;
    for (std::size_t i = 0; i < tables_.size(); ++i) {
        const double wi = b.weight(i);
        if (wi > 0.0) q += wi * tables_[i].q_value(s, a);
    }
    return q;
}

Action QmdpSolution::policy(const Belief& b, const AugState& s) const {
    ActionList acts;
    model_->legal_actions(s, acts);
    if (acts.empty()) throw StateError("QmdpSolution::policy: no legal actions");
    Action best = acts[0];
    double best_q = -std::numeric_limits<double>::infinity();
    for (Action a : acts) {
        const double q = combined_q(b, s, a);
        if (q > best_q) {
            best_q = q;
            best = a;
        }
    }
    return best;
}

double QmdpSolution::combined_value(const Belief& b, const AugState& s) const {
    if (!b.is_exact() || b.size() != tables_.size())
        throw ArgumentError("QmdpSolution: belief must be exact over the solved hidden space");
    double v = 0.0;
    for (std::size_t i = 0; i < tables_.size(); ++i) {
        const double wi = b.weight(i);
        if (wi > 0.0) v += wi * tables_[i].value(s);
    }
    return v;
}

Action pomdplite_policy(const Model& model, const Belief& b, const AugState& s,
                        const PlannerConfig& cfg, Rng& rng) {
    if (cfg.engine == PlanEngine::Vi)
        return solve_internal_vi(model, b, cfg, s).greedy(s);
    return uct_plan(model, b, s, cfg, rng);
}

Action mean_mdp_policy(const Model& model, const Belief& b, const AugState& s,
                       const PlannerConfig& cfg, Rng& rng) {
    PlannerConfig zeroed = cfg;
    zeroed.beta = 0.0;
    return pomdplite_policy(model, b, s, zeroed, rng);
}

Action random_policy(const Model& model, const AugState& s, Rng& rng) {
    ActionList acts;
    model.legal_actions(s, acts);
    if (acts.empty()) throw StateError("random_policy: no legal actions");
    return acts[rng.uniform_int(acts.size())];
}

}  // namespace pomdplite

#pragma once

#include <utility>
#include <vector>

#include "pomdplite/model.hpp"

namespace pomdplite {

using AugSupport = std::vector<Weighted<AugState>>;

/// The MDP with parameter theta from the equivalence transformation.
/// Its state space is X x (O u {null}); its transition mass factorizes as
/// P(obs' | theta', x', a) * P(x' | theta, x, a) with theta' the (deterministic)
/// successor hidden value. Reward and discount pass through unchanged.
class IndexedMdpView {
public:
    IndexedMdpView(const Model& model, std::int64_t theta_index, Theta theta)
        : model_(&model), theta_index_(theta_index), theta_(std::move(theta)) {}

    const Model& model() const { return *model_; }
    std::int64_t theta_index() const { return theta_index_; }
    const Theta& theta() const { return theta_; }
    double discount() const { return model_->discount(); }

    double reward(const AugState& s, Action a) const {
        return model_->reward(theta_, s.x, a);
    }

    void transition(const AugState& s, Action a, AugSupport& out) const;

    /// Augmented states reachable from start under every action, breadth-first.
    std::vector<AugState> reachable_states(const AugState& start, std::size_t cap) const;

private:
    const Model* model_;
    std::int64_t theta_index_;
    Theta theta_;
};

IndexedMdpView indexed_mdp_view(const Model& model, std::int64_t theta_index);

struct StepResult {
    AugState next;
    Theta theta_next;
    double reward;
};

/// One environment step under the true hidden value. Validates that the
/// action is legal and the state non-terminal.
StepResult sample_step(const Model& model, const Theta& theta, const AugState& s,
                       Action a, Rng& rng);
StepResult sample_step(const Model& model, std::int64_t theta_index, const AugState& s,
                       Action a, Rng& rng);

/// Fold the hidden dynamics over a history of (x, a) pairs.
Theta history_fold(const Model& model, const Theta& theta0,
                   std::span<const std::pair<Bits, Action>> transitions);

bool is_action_legal(const Model& model, const AugState& s, Action a);

}  // namespace pomdplite

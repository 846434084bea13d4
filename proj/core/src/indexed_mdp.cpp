#include "pomdplite/indexed_mdp.hpp"

#include <deque>
#include <unordered_set>

namespace pomdplite {

void IndexedMdpView::transition(const AugState& s, Action a, AugSupport& out) const {
    out.clear();
    StateSupport xs;
    model_->transition_support(theta_, s.x, a, xs);
    const Theta theta_next = model_->dynamics(theta_, s.x, a);
    ObsSupport os;
    for (const auto& xe : xs) {
        model_->observation_support(theta_next, xe.value, a, os);
        for (const auto& oe : os)
            out.push_back({AugState{xe.value, oe.value}, xe.prob * oe.prob});
    }
}

std::vector<AugState> IndexedMdpView::reachable_states(const AugState& start,
                                                       std::size_t cap) const {
    std::vector<AugState> order;
    std::unordered_set<AugState, AugStateHash> seen;
    std::deque<AugState> frontier{start};
    seen.insert(start);
    ActionList acts;
    AugSupport sup;
    while (!frontier.empty()) {
        AugState s = std::move(frontier.front());
        frontier.pop_front();
        order.push_back(s);
        if (order.size() > cap)
            throw BudgetError(model_->name() + ": reachable state space exceeds cap");
        if (model_->is_terminal(s.x)) continue;
        model_->legal_actions(s, acts);
        for (Action a : acts) {
            transition(s, a, sup);
            for (const auto& e : sup)
                if (seen.insert(e.value).second) frontier.push_back(e.value);
        }
    }
    return order;
}

IndexedMdpView indexed_mdp_view(const Model& model, std::int64_t theta_index) {
    const std::int64_t n = model.num_hidden_values();
    if (n < 1)
        throw UnsupportedError(model.name() + ": hidden values are not enumerable");
    if (theta_index < 0 || theta_index >= n)
        throw ArgumentError("indexed_mdp_view: theta index out of range");
    return IndexedMdpView(model, theta_index, model.hidden_value(theta_index));
}

bool is_action_legal(const Model& model, const AugState& s, Action a) {
    ActionList acts;
    model.legal_actions(s, acts);
    for (Action x : acts)
        if (x == a) return true;
    return false;
}

StepResult sample_step(const Model& model, const Theta& theta, const AugState& s,
                       Action a, Rng& rng) {
    if (model.is_terminal(s.x))
        throw StateError("sample_step: state is terminal");
    if (!is_action_legal(model, s, a))
        throw ArgumentError("sample_step: action " + model.format_action(a) +
                            " is not legal at " + format_aug_state(model, s));
    const double r = model.reward(theta, s.x, a);
    Bits x2 = model.sample_transition(theta, s.x, a, rng);
    Theta theta_next = model.dynamics(theta, s.x, a);
    Obs o = model.sample_observation(theta_next, x2, a, rng);
    return StepResult{AugState{std::move(x2), o}, std::move(theta_next), r};
}

StepResult sample_step(const Model& model, std::int64_t theta_index, const AugState& s,
                       Action a, Rng& rng) {
    return sample_step(model, model.hidden_value(theta_index), s, a, rng);
}

Theta history_fold(const Model& model, const Theta& theta0,
                   std::span<const std::pair<Bits, Action>> transitions) {
    Theta theta = theta0;
    for (const auto& [x, a] : transitions) theta = model.dynamics(theta, x, a);
    return theta;
}

}  // namespace pomdplite

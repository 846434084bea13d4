#include "pomdplite/oracle.hpp"

#include <limits>

namespace pomdplite {
namespace {

struct Expander {
    const Model& model;
    std::size_t node_cap;
    std::size_t nodes = 0;

    double value(const Belief& b, const AugState& s, int h, Action* best_action) {
        if (h == 0 || model.is_terminal(s.x)) return 0.0;
        if (++nodes > node_cap)
            throw BudgetError("bayes_optimal_oracle: belief tree exceeds node cap");
        ActionList acts;
        model.legal_actions(s, acts);
        if (acts.empty()) return 0.0;
        const double gamma = model.discount();
        double best = -std::numeric_limits<double>::infinity();
        Action arg = acts[0];
        AugSupport sup;
        for (Action a : acts) {
            double q = mean_reward(model, b, s, a);
            mean_transition(model, b, s, a, sup);
            for (const auto& e : sup) {
                if (e.prob <= 0.0) continue;
                Belief b2 = bayes_update(model, b, s, a, e.value);
                q += gamma * e.prob * value(b2, e.value, h - 1, nullptr);
            }
            if (q > best) {
                best = q;
                arg = a;
            }
        }
        if (best_action) *best_action = arg;
        return best;
    }
};

}  // namespace

OracleResult bayes_optimal_oracle(const Model& model, const Belief& belief,
                                  const AugState& s, int horizon, std::size_t node_cap) {
    if (horizon < 1) throw ArgumentError("bayes_optimal_oracle: horizon must be >= 1");
    if (model.is_terminal(s.x)) throw StateError("bayes_optimal_oracle: state is terminal");
    Expander ex{model, node_cap};
    OracleResult res;
    res.value = ex.value(belief, s, horizon, &res.action);
    res.nodes = ex.nodes;
    return res;
}

}  // namespace pomdplite

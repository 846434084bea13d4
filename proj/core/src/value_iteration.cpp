#include "pomdplite/value_iteration.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

namespace pomdplite {

double ValueTable::value(const AugState& s) const {
    auto it = table_.find(s);
    if (it == table_.end()) return 0.0;
    double best = -std::numeric_limits<double>::infinity();
    if (it->second.q.empty()) return 0.0;
    for (double q : it->second.q) best = std::max(best, q);
    return best;
}

double ValueTable::q_value(const AugState& s, Action a) const {
    auto it = table_.find(s);
    if (it == table_.end()) throw StateError("ValueTable: state not in table");
    for (std::size_t i = 0; i < it->second.actions.size(); ++i)
        if (it->second.actions[i] == a) return it->second.q[i];
    throw StateError("ValueTable: action not legal at state");
}

Action ValueTable::greedy(const AugState& s) const {
    auto it = table_.find(s);
    if (it == table_.end() || it->second.actions.empty())
        throw StateError("ValueTable: no actions at state");
    const auto& e = it->second;
    std::size_t best = 0;
    for (std::size_t i = 1; i < e.actions.size(); ++i)
        if (e.q[i] > e.q[best]) best = i;
    return e.actions[best];
}

namespace {

struct CompiledMdp {
    std::vector<AugState> states;
    struct Arm {
        Action a;
        double r;
        std::uint32_t edge_begin, edge_end;
    };
    std::vector<std::vector<Arm>> arms;          // per state; empty = terminal
    std::vector<std::pair<std::uint32_t, double>> edges;
};

using StepFn = std::function<void(const AugState&, Action, double& r, AugSupport&)>;

CompiledMdp compile_reachable(const Model& model, const AugState& start, std::size_t cap,
                              const StepFn& step) {
    CompiledMdp c;
    std::unordered_map<AugState, std::uint32_t, AugStateHash> index;
    std::deque<std::uint32_t> frontier;
    auto intern = [&](const AugState& s) {
        auto [it, fresh] = index.try_emplace(s, static_cast<std::uint32_t>(c.states.size()));
        if (fresh) {
            if (c.states.size() >= cap)
                throw BudgetError(model.name() + ": state space exceeds the solver cap");
            c.states.push_back(s);
            c.arms.emplace_back();
            frontier.push_back(it->second);
        }
        return it->second;
    };
    intern(start);
    ActionList acts;
    AugSupport sup;
    while (!frontier.empty()) {
        const std::uint32_t si = frontier.front();
        frontier.pop_front();
        AugState s = c.states[si];
        if (model.is_terminal(s.x)) continue;
        model.legal_actions(s, acts);
        for (Action a : acts) {
            double r = 0.0;
            step(s, a, r, sup);
            CompiledMdp::Arm arm{a, r, static_cast<std::uint32_t>(c.edges.size()), 0};
            for (const auto& e : sup) c.edges.emplace_back(intern(e.value), e.prob);
            arm.edge_end = static_cast<std::uint32_t>(c.edges.size());
            c.arms[si].push_back(arm);
        }
    }
    return c;
}

ValueTable run_vi(const Model& model, CompiledMdp& c, double tolerance, int max_iters) {
    const double gamma = model.discount();
    const std::size_t n = c.states.size();
    std::vector<double> v(n, 0.0), v2(n, 0.0);
    double residual = 0.0;
    int iter = 0;
    for (; iter < max_iters; ++iter) {
        residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (c.arms[i].empty()) {
                v2[i] = 0.0;
                continue;
            }
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& arm : c.arms[i]) {
                double q = arm.r;
                for (std::uint32_t e = arm.edge_begin; e < arm.edge_end; ++e)
                    q += gamma * c.edges[e].second * v[c.edges[e].first];
                best = std::max(best, q);
            }
            v2[i] = best;
            residual = std::max(residual, std::abs(v2[i] - v[i]));
        }
        v.swap(v2);
        if (residual <= tolerance) break;
    }
    if (residual > tolerance)
        throw ConvergenceError(model.name() + ": value iteration residual " +
                                   std::to_string(residual) + " after " +
                                   std::to_string(max_iters) + " iterations",
                               residual);

    ValueTable table;
    table.iterations = iter + 1;
    table.residual = residual;
    for (std::size_t i = 0; i < n; ++i) {
        ValueTable::Entry entry;
        for (const auto& arm : c.arms[i]) {
            double q = arm.r;
            for (std::uint32_t e = arm.edge_begin; e < arm.edge_end; ++e)
                q += gamma * c.edges[e].second * v[c.edges[e].first];
            entry.actions.push_back(arm.a);
            entry.q.push_back(q);
        }
        table.entries().emplace(c.states[i], std::move(entry));
    }
    return table;
}

}  // namespace

ValueTable solve_internal_vi(const Model& model, const Belief& belief,
                             const PlannerConfig& cfg) {
    return solve_internal_vi(model, belief, cfg, initial_aug_state(model));
}

ValueTable solve_internal_vi(const Model& model, const Belief& belief,
                             const PlannerConfig& cfg, const AugState& start) {
    InternalRewardModel irm(model, belief, cfg.beta, cfg.bonus, cfg.seed ^ 0x1e7a11ULL);
    CompiledMdp c = compile_reachable(
        model, start, cfg.vi_state_cap,
        [&](const AugState& s, Action a, double& r, AugSupport& sup) {
            r = irm.internal_reward(s, a);
            irm.mean_transition(s, a, sup);
        });
    return run_vi(model, c, cfg.vi_tolerance, cfg.vi_max_iters);
}

ValueTable solve_mdp_vi(const IndexedMdpView& mdp, const AugState& start, double tolerance,
                        int max_iters, std::size_t state_cap) {
    CompiledMdp c = compile_reachable(
        mdp.model(), start, state_cap,
        [&](const AugState& s, Action a, double& r, AugSupport& sup) {
            r = mdp.reward(s, a);
            mdp.transition(s, a, sup);
        });
    return run_vi(mdp.model(), c, tolerance, max_iters);
}

}  // namespace pomdplite

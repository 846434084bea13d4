#include "pomdplite/uct.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace pomdplite {
namespace {

struct QArm {
    double rtilde = 0.0;
    bool rtilde_ready = false;
    double sum = 0.0;
    std::int64_t n = 0;
    boost::container::small_vector<std::pair<AugState, std::uint32_t>, 2> kids;
};

struct VNode {
    std::int64_t n = 0;
    std::vector<QArm> arms;  // parallel to `actions`
    ActionList actions;
};

class Search {
public:
    Search(const Model& model, const Belief& belief, const PlannerConfig& cfg, Rng& rng)
        : model_(model),
          cfg_(cfg),
          rng_(rng),
          irm_(model, belief, cfg.beta, cfg.bonus, rng.next_u64()),
          gamma_(model.discount()),
          c_(cfg.exploration_for(model)),
          depth_cap_(cfg.depth_cap_for(model)) {
        if (depth_cap_ < 1) throw ArgumentError("uct_plan: depth cap must be >= 1");
        nodes_.reserve(4096);
    }

    std::uint32_t make_node(const AugState& s) {
        nodes_.emplace_back();
        VNode& v = nodes_.back();
        model_.legal_actions(s, v.actions);
        v.arms.resize(v.actions.size());
        return static_cast<std::uint32_t>(nodes_.size() - 1);
    }

    std::size_t select_arm(const VNode& v) const {
        const double logn = std::log(static_cast<double>(v.n + 1));
        std::size_t best = 0;
        double best_ucb = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < v.arms.size(); ++i) {
            const QArm& arm = v.arms[i];
            if (arm.n == 0) return i;  // index order
            const double ucb = arm.sum / static_cast<double>(arm.n) +
                               c_ * std::sqrt(logn / static_cast<double>(arm.n));
            if (ucb > best_ucb) {
                best_ucb = ucb;
                best = i;
            }
        }
        return best;
    }

    double rollout(AugState s, int depth, const Theta* pinned) {
        double total = 0.0;
        double disc = 1.0;
        ActionList acts;
        while (depth < depth_cap_ && !model_.is_terminal(s.x)) {
            model_.legal_actions(s, acts);
            if (acts.empty()) break;
            const Action a = acts[rng_.uniform_int(acts.size())];
            total += disc * irm_.internal_reward(s, a);
            s = pinned ? irm_.step_with(*pinned, s, a, rng_)
                       : irm_.mean_step(s, a, rng_);
            disc *= gamma_;
            ++depth;
        }
        return total;
    }

    double simulate(std::uint32_t vi, const AugState& s, int depth, bool& expanded,
                    const Theta* pinned) {
        if (depth >= depth_cap_ || model_.is_terminal(s.x)) return 0.0;
        if (nodes_[vi].arms.empty()) return 0.0;  // dead end without a terminal flag
        const std::size_t ai = select_arm(nodes_[vi]);
        const Action a = nodes_[vi].actions[ai];
        {
            QArm& arm = nodes_[vi].arms[ai];
            if (!arm.rtilde_ready) {
                arm.rtilde = irm_.internal_reward(s, a);
                arm.rtilde_ready = true;
            }
        }
        const double r = nodes_[vi].arms[ai].rtilde;
        AugState next = pinned ? irm_.step_with(*pinned, s, a, rng_)
                               : irm_.mean_step(s, a, rng_);

        double tail;
        if (model_.is_terminal(next.x)) {
            tail = 0.0;
        } else {
            std::uint32_t child = UINT32_MAX;
            for (const auto& [ks, kv] : nodes_[vi].arms[ai].kids)
                if (ks == next) {
                    child = kv;
                    break;
                }
            if (child != UINT32_MAX) {
                tail = simulate(child, next, depth + 1, expanded, pinned);
            } else if (!expanded) {
                expanded = true;
                child = make_node(next);
                nodes_[vi].arms[ai].kids.emplace_back(next, child);
                tail = rollout(std::move(next), depth + 1, pinned);
            } else {
                tail = rollout(std::move(next), depth + 1, pinned);
            }
        }
        const double total = r + gamma_ * tail;
        QArm& arm = nodes_[vi].arms[ai];
        arm.sum += total;
        arm.n += 1;
        nodes_[vi].n += 1;
        return total;
    }

    Action run(const AugState& root_state, std::vector<UctRootArm>* root_stats) {
        const std::uint32_t root = make_node(root_state);
        if (nodes_[root].actions.empty())
            throw StateError("uct_plan: no legal actions at " +
                             format_aug_state(model_, root_state));

        const bool timed = cfg_.time_budget_ms > 0;
        if (!timed && cfg_.uct_simulations < 1)
            throw ArgumentError("uct_plan: set a positive simulation or time budget");
        const auto t0 = std::chrono::steady_clock::now();
        std::int64_t sims = 0;
        while (true) {
            if (timed) {
                const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count();
                if (sims > 0 && elapsed >= cfg_.time_budget_ms) break;
            } else if (sims >= cfg_.uct_simulations) {
                break;
            }
            bool expanded = false;
            if (cfg_.theta_persistence) {
                const Theta pinned = irm_.theta_value(irm_.draw_theta_index(rng_));
                simulate(root, root_state, 0, expanded, &pinned);
            } else {
                simulate(root, root_state, 0, expanded, nullptr);
            }
            ++sims;
        }

        const VNode& v = nodes_[root];
        std::size_t best = 0;
        double best_mean = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < v.arms.size(); ++i) {
            if (v.arms[i].n == 0) continue;
            const double mean = v.arms[i].sum / static_cast<double>(v.arms[i].n);
            if (mean > best_mean) {
                best_mean = mean;
                best = i;
            }
        }
        if (root_stats) {
            root_stats->clear();
            for (std::size_t i = 0; i < v.arms.size(); ++i)
                root_stats->push_back({v.actions[i],
                                       v.arms[i].n ? v.arms[i].sum / static_cast<double>(v.arms[i].n)
                                                   : 0.0,
                                       v.arms[i].n});
        }
        return v.actions[best];
    }

private:
    const Model& model_;
    const PlannerConfig& cfg_;
    Rng& rng_;
    InternalRewardModel irm_;
    double gamma_;
    double c_;
    int depth_cap_;
    std::vector<VNode> nodes_;
};

}  // namespace

Action uct_plan(const Model& model, const Belief& belief, const AugState& s,
                const PlannerConfig& cfg, Rng& rng, std::vector<UctRootArm>* root_stats) {
    if (model.is_terminal(s.x))
        throw StateError("uct_plan: state is terminal");
    Search search(model, belief, cfg, rng);
    return search.run(s, root_stats);
}

}  // namespace pomdplite

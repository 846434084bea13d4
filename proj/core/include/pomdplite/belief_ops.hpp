#pragma once

#include <optional>
#include <unordered_map>

#include "pomdplite/belief.hpp"
#include "pomdplite/indexed_mdp.hpp"

namespace pomdplite {

/// Posterior after observing the transition s --a--> next. Weights are
/// multiplied by the per-hypothesis likelihood
///   P(x' | theta, x, a) * P(obs' | phi(theta,x,a), x', a)
/// and renormalized; hypothesis values advance through phi.
/// Throws InconsistencyError when every hypothesis assigns zero likelihood.
Belief bayes_update(const Model& model, const Belief& b, const AugState& s, Action a,
                    const AugState& next);

/// Sum of |b1(i) - b2(i)| over the shared hypothesis set; in [0, 2].
/// Both beliefs must have matched identities (same kind and size), as
/// produced by updating one from the other.
double l1_divergence(const Belief& b1, const Belief& b2);

double mean_reward(const Model& model, const Belief& b, const AugState& s, Action a);

/// Joint successor distribution P(s' | b, s, a) over augmented states,
/// enumerated exactly. Throws BudgetError past `support_cap` outcomes.
void mean_transition(const Model& model, const Belief& b, const AugState& s, Action a,
                     AugSupport& out, std::size_t support_cap = 1u << 20);

struct BonusConfig {
    /// Exact enumeration is used while |support(b)| * |outcomes| stays at or
    /// below this; larger problems fall back to paired sampling.
    std::size_t exact_cap = 1u << 20;
    /// Paired (theta, s') samples for the fallback estimator.
    int sample_count = 256;
};

struct BonusEstimate {
    double value = 0.0;
    double stderr_ = 0.0;  // zero when exact
    bool exact = true;
};

/// Expected L1 divergence between b and its update, scaled by beta:
///   beta * sum_{s'} P(s' | b, s, a) * || b_{s'} - b ||_1.
/// `rng` is only touched on the sampled path.
BonusEstimate reward_bonus_estimate(const Model& model, const Belief& b, const AugState& s,
                                    Action a, double beta, const BonusConfig& cfg = {},
                                    Rng* rng = nullptr);

double reward_bonus(const Model& model, const Belief& b, const AugState& s, Action a,
                    double beta, const BonusConfig& cfg = {}, Rng* rng = nullptr);

/// Mean reward plus reward bonus (the internal reward R~).
double internal_reward(const Model& model, const Belief& b, const AugState& s, Action a,
                       double beta, const BonusConfig& cfg = {}, Rng* rng = nullptr);

/// The frozen-belief internal-reward MDP solved at every planning step: mean
/// transition dynamics plus R~ = mean reward + bonus, with the belief never
/// updated inside the recursion. Prepares a per-step evaluator (domain fast
/// path when available, memoized generic computation otherwise) and an O(1)
/// sampler for theta ~ b.
class InternalRewardModel {
public:
    InternalRewardModel(const Model& model, Belief belief, double beta,
                        BonusConfig cfg = {}, std::uint64_t sample_seed = 0x5eedf00dULL);

    const Model& model() const { return *model_; }
    const Belief& belief() const { return belief_; }
    double beta() const { return beta_; }

    double internal_reward(const AugState& s, Action a);

    std::size_t draw_theta_index(Rng& rng) const;
    const Theta& theta_value(std::size_t i) const { return belief_.value(i); }

    /// One mean-model step: theta ~ b, then x' and obs' under that theta.
    AugState mean_step(const AugState& s, Action a, Rng& rng) const;

    /// Step under a fixed hypothesis (root-sampled theta persistence).
    AugState step_with(const Theta& theta, const AugState& s, Action a, Rng& rng) const;

    void mean_transition(const AugState& s, Action a, AugSupport& out,
                         std::size_t support_cap = 1u << 20) const;

private:
    struct Key {
        Bits x;
        Action a;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return hash_bits(k.x) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(k.a);
        }
    };

    const Model* model_;
    Belief belief_;
    double beta_;
    BonusConfig cfg_;
    std::unique_ptr<InternalRewardContext> ctx_;
    std::unordered_map<Key, double, KeyHash> memo_;
    Rng sample_rng_;
    // Walker alias table over belief weights.
    std::vector<std::uint32_t> alias_;
    std::vector<double> alias_prob_;
};

/// Multinomial bootstrap resample to `count` uniform-weight particles.
Belief bootstrap_resample(const Belief& b, int count, Rng& rng);

/// Rebuild a particle belief from the model's evidence-conditioned sampler.
Belief evidence_resample(const Model& model, std::span<const EvidenceStep> evidence,
                         int count, Rng& rng);

}  // namespace pomdplite

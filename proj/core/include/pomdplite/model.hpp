#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pomdplite/bits.hpp"
#include "pomdplite/errors.hpp"
#include "pomdplite/rng.hpp"

namespace pomdplite {

using Action = std::int32_t;
using Obs = std::int32_t;

/// Distinguished "no observation received" member of the observation set.
inline constexpr Obs kNullObs = -1;

/// A hidden-parameter value. Enumerable models use the canonical encoding
/// bits_of(index); generative models pack whatever they need.
using Theta = Bits;

/// MDP state of the transformed model: observable state plus the latest
/// observation. Two augmented states are equal iff both components are.
struct AugState {
    Bits x;
    Obs obs = kNullObs;
    bool operator==(const AugState&) const = default;
};

struct AugStateHash {
    std::size_t operator()(const AugState& s) const {
        return hash_bits(s.x) ^ (static_cast<std::uint64_t>(s.obs + 7) * 0x9e3779b97f4a7c15ULL);
    }
};

template <typename T>
struct Weighted {
    T value;
    double prob;
};

using StateSupport = boost::container::small_vector<Weighted<Bits>, 8>;
using ObsSupport = boost::container::small_vector<Weighted<Obs>, 4>;
using ActionList = boost::container::small_vector<Action, 16>;

/// One observed transition, as accumulated by the agent loop. Used when a
/// particle belief must be rebuilt from scratch (see Model::sample_hidden_consistent).
struct EvidenceStep {
    AugState s;
    Action a;
    AugState next;
};

class Belief;

/// Per-planning-step evaluator for the frozen-belief internal reward.
/// Models may provide one as an exact fast path; the generic route computes
/// the same value from the support-enumeration primitives below.
class InternalRewardContext {
public:
    virtual ~InternalRewardContext() = default;
    virtual double internal_reward(const Bits& x, Action a) const = 0;
};

/// A POMDP-lite model: fully observable state x, finitely many hidden values
/// theta (static or deterministically evolving), actions, observations, and
/// per-theta transition/observation/reward functions.
///
/// Immutable after construction and safe to share across concurrent episode
/// workers. All sampling takes a caller-owned Rng.
class Model {
public:
    virtual ~Model() = default;

    virtual std::string name() const = 0;
    virtual double discount() const = 0;
    virtual int num_actions() const = 0;

    // --- hidden parameter space -------------------------------------------

    /// Number of hidden values, or -1 when the space is too large to
    /// enumerate (generative prior only).
    virtual std::int64_t num_hidden_values() const = 0;

    /// Canonical value for an index (enumerable models).
    virtual Theta hidden_value(std::int64_t index) const {
        if (index < 0 || index >= num_hidden_values())
            throw ArgumentError("hidden_value: index out of range");
        return bits_of(static_cast<std::uint64_t>(index));
    }

    /// Prior over the enumerated hidden values. Defaults to uniform.
    virtual void prior_weights(std::vector<double>& out) const {
        const std::int64_t n = num_hidden_values();
        if (n < 1) throw UnsupportedError(name() + ": prior is not enumerable");
        out.assign(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
    }

    virtual Theta sample_hidden_prior(Rng& rng) const;

    /// Draw a hidden value consistent with the full evidence so far.
    /// Only meaningful for models that opt in (e.g. Battleship layouts).
    virtual bool supports_evidence_resample() const { return false; }
    virtual Theta sample_hidden_consistent(std::span<const EvidenceStep>, Rng&) const {
        throw UnsupportedError(name() + ": evidence-conditioned resampling not supported");
    }

    // --- observable process -----------------------------------------------

    virtual Bits initial_x() const = 0;
    virtual bool is_terminal(const Bits& x) const = 0;

    /// Legal actions at s; empty iff s is terminal. Deterministic in s.
    virtual void legal_actions(const AugState& s, ActionList& out) const = 0;

    virtual double reward(const Theta& theta, const Bits& x, Action a) const = 0;

    /// Deterministic hidden dynamics (identity for static models).
    virtual Theta dynamics(const Theta& theta, const Bits& /*x*/, Action /*a*/) const {
        return theta;
    }
    virtual bool has_static_hidden() const { return true; }

    virtual void transition_support(const Theta& theta, const Bits& x, Action a,
                                    StateSupport& out) const = 0;

    /// Observation distribution at the successor state x2. The default is the
    /// distinguished null observation with probability one.
    virtual void observation_support(const Theta&, const Bits& /*x2*/, Action /*a*/,
                                     ObsSupport& out) const {
        out.clear();
        out.push_back({kNullObs, 1.0});
    }

    virtual double transition_prob(const Theta& theta, const Bits& x, Action a,
                                   const Bits& x2) const;
    virtual double observation_prob(const Theta& theta, const Bits& x2, Action a,
                                    Obs o) const;
    virtual Bits sample_transition(const Theta& theta, const Bits& x, Action a,
                                   Rng& rng) const;
    virtual Obs sample_observation(const Theta& theta, const Bits& x2, Action a,
                                   Rng& rng) const;

    // --- planner hooks ------------------------------------------------------

    /// Exact fast path for the frozen-belief internal reward; nullptr selects
    /// the generic computation.
    virtual std::unique_ptr<InternalRewardContext>
    internal_reward_context(const Belief&, double /*beta*/) const {
        return nullptr;
    }

    /// UCT exploration constant when the config does not pin one
    /// (roughly the empirical return range of the domain).
    virtual double suggested_exploration() const { return 1.0; }

    /// Rollout depth cap when the config does not pin one.
    virtual int suggested_depth_cap() const { return 90; }

    // --- presentation -------------------------------------------------------

    virtual std::string format_x(const Bits& x) const;
    virtual std::string format_action(Action a) const;
    virtual std::string format_obs(Obs o) const;
};

inline AugState initial_aug_state(const Model& m) { return AugState{m.initial_x(), kNullObs}; }

std::string format_aug_state(const Model& m, const AugState& s);

}  // namespace pomdplite

#pragma once

#include <cmath>
#include <vector>

#include "pomdplite/model.hpp"

namespace pomdplite {

/// Probability distribution over the hidden parameter.
///
/// Exact beliefs hold one weight per enumerated hidden value; particle
/// beliefs hold a weighted multiset of hidden values. Both store the current
/// per-hypothesis value so deterministically evolving hidden variables stay
/// tracked without re-folding the history. Beliefs are immutable values:
/// updates return new beliefs.
class Belief {
public:
    enum class Kind { Exact, Particle };

    Belief() = default;

    static Belief exact(std::vector<double> weights, std::vector<Theta> values);
    static Belief particles(std::vector<Theta> values, std::vector<double> weights);

    /// Exact belief over an enumerable model's full hidden space, with the
    /// model's prior weights.
    static Belief exact_prior(const Model& model);

    /// Particle belief drawn from the model prior.
    static Belief particle_prior(const Model& model, int count, Rng& rng);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    std::size_t size() const { return weights_.size(); }

    double weight(std::size_t i) const { return weights_[i]; }
    const Theta& value(std::size_t i) const { return values_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<Theta>& values() const { return values_; }

    double total_weight() const;
    bool is_normalized(double tol = 1e-9) const;

    /// 1 / sum(w^2); equals the particle count for uniform weights.
    double effective_sample_size() const;

    double max_weight() const;
    double entropy() const;

    /// True when all mass sits on hypotheses with one shared value.
    bool is_degenerate() const;

    friend class BeliefBuilder;

    // Internal: replaces weights (must be same size, normalized by caller).
    Belief with_weights(std::vector<double> w, std::vector<Theta> values) const;

private:
    Kind kind_ = Kind::Exact;
    std::vector<double> weights_;
    std::vector<Theta> values_;
};

/// Default exact-representation cutoff for enumerable hidden spaces.
inline constexpr std::int64_t kExactBeliefThreshold = 4096;

/// Exact prior when the hidden space is enumerable and small, else a
/// particle prior with `particle_count` draws.
Belief make_prior_belief(const Model& model, int particle_count, Rng& rng,
                         std::int64_t exact_threshold = kExactBeliefThreshold);

}  // namespace pomdplite

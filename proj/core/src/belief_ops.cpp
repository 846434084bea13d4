#include "pomdplite/belief_ops.hpp"

#include <algorithm>
#include <cmath>

namespace pomdplite {
namespace {

double step_likelihood(const Model& model, const Theta& theta, const AugState& s,
                       Action a, const AugState& next, bool static_hidden) {
    const double tp = model.transition_prob(theta, s.x, a, next.x);
    if (tp <= 0.0) return 0.0;
    if (static_hidden) return tp * model.observation_prob(theta, next.x, a, next.obs);
    const Theta theta2 = model.dynamics(theta, s.x, a);
    return tp * model.observation_prob(theta2, next.x, a, next.obs);
}

}  // namespace

Belief bayes_update(const Model& model, const Belief& b, const AugState& s, Action a,
                    const AugState& next) {
    const bool static_hidden = model.has_static_hidden();
    const std::size_t n = b.size();
    std::vector<double> w(n, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = b.weight(i);
        if (wi <= 0.0) continue;
        const double like = step_likelihood(model, b.value(i), s, a, next, static_hidden);
        w[i] = wi * like;
        total += w[i];
    }
    if (!(total > 0.0))
        throw InconsistencyError("bayes_update: transition " + format_aug_state(model, s) +
                                 " --" + model.format_action(a) + "--> " +
                                 format_aug_state(model, next) +
                                 " has zero likelihood under every hypothesis in the belief");
    for (double& wi : w) wi /= total;

    std::vector<Theta> values;
    if (static_hidden) {
        values = b.values();
    } else {
        values.reserve(n);
        for (std::size_t i = 0; i < n; ++i) values.push_back(model.dynamics(b.value(i), s.x, a));
    }
    return b.with_weights(std::move(w), std::move(values));
}

double l1_divergence(const Belief& b1, const Belief& b2) {
    if (b1.kind() != b2.kind() || b1.size() != b2.size())
        throw ArgumentError("l1_divergence: beliefs are over different hypothesis sets");
    double d = 0.0;
    for (std::size_t i = 0; i < b1.size(); ++i) d += std::abs(b1.weight(i) - b2.weight(i));
    return d;
}

double mean_reward(const Model& model, const Belief& b, const AugState& s, Action a) {
    double r = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double wi = b.weight(i);
        if (wi > 0.0) r += wi * model.reward(b.value(i), s.x, a);
    }
    return r;
}

namespace {

/// Joint outcomes of (s, a) under the belief together with the per-hypothesis
/// likelihood rows needed for exact posterior and bonus computation.
struct JointEnumeration {
    std::vector<AugState> outcomes;
    std::vector<std::vector<double>> likes;  // [outcome][hypothesis]
    std::vector<double> mass;                // P(s' | b, s, a)
    bool aborted = false;                    // exceeded the cap
};

JointEnumeration enumerate_joint(const Model& model, const Belief& b, const AugState& s,
                                 Action a, std::size_t cell_cap) {
    JointEnumeration je;
    const bool static_hidden = model.has_static_hidden();
    const std::size_t n = b.size();
    StateSupport ts;
    ObsSupport os;
    for (std::size_t i = 0; i < n; ++i) {
        if (b.weight(i) <= 0.0) continue;
        const Theta& theta = b.value(i);
        model.transition_support(theta, s.x, a, ts);
        const Theta theta2 = static_hidden ? theta : model.dynamics(theta, s.x, a);
        for (const auto& xe : ts) {
            if (xe.prob <= 0.0) continue;
            model.observation_support(theta2, xe.value, a, os);
            for (const auto& oe : os) {
                if (oe.prob <= 0.0) continue;
                const AugState next{xe.value, oe.value};
                std::size_t j = 0;
                for (; j < je.outcomes.size(); ++j)
                    if (je.outcomes[j] == next) break;
                if (j == je.outcomes.size()) {
                    if ((je.outcomes.size() + 1) * n > cell_cap) {
                        je.aborted = true;
                        return je;
                    }
                    je.outcomes.push_back(next);
                    je.likes.emplace_back(n, 0.0);
                }
                je.likes[j][i] += xe.prob * oe.prob;
            }
        }
    }
    je.mass.resize(je.outcomes.size(), 0.0);
    for (std::size_t j = 0; j < je.outcomes.size(); ++j) {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) m += b.weight(i) * je.likes[j][i];
        je.mass[j] = m;
    }
    return je;
}

}  // namespace

void mean_transition(const Model& model, const Belief& b, const AugState& s, Action a,
                     AugSupport& out, std::size_t support_cap) {
    JointEnumeration je = enumerate_joint(model, b, s, a, support_cap * std::max<std::size_t>(b.size(), 1));
    if (je.aborted || je.outcomes.size() > support_cap)
        throw BudgetError("mean_transition: joint support exceeds cap");
    out.clear();
    out.reserve(je.outcomes.size());
    for (std::size_t j = 0; j < je.outcomes.size(); ++j)
        out.push_back({std::move(je.outcomes[j]), je.mass[j]});
}

BonusEstimate reward_bonus_estimate(const Model& model, const Belief& b, const AugState& s,
                                    Action a, double beta, const BonusConfig& cfg, Rng* rng) {
    if (beta < 0.0) throw ArgumentError("reward_bonus: beta must be nonnegative");
    BonusEstimate est;
    if (beta == 0.0) return est;

    JointEnumeration je = enumerate_joint(model, b, s, a, cfg.exact_cap);
    if (!je.aborted) {
        double bonus = 0.0;
        for (std::size_t j = 0; j < je.outcomes.size(); ++j) {
            const double m = je.mass[j];
            if (m <= 0.0) continue;
            double l1 = 0.0;
            for (std::size_t i = 0; i < b.size(); ++i) {
                const double wi = b.weight(i);
                l1 += std::abs(wi * je.likes[j][i] / m - wi);
            }
            bonus += m * l1;
        }
        est.value = beta * bonus;
        return est;
    }

    // Paired sampling: theta ~ b, s' ~ T(theta, s, a), averaged L1 of the update.
    Rng local(0x0b0bu);
    Rng& r = rng ? *rng : local;
    const int m = std::max(cfg.sample_count, 1);
    // CDF draw over belief weights.
    std::vector<double> cdf(b.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        acc += b.weight(i);
        cdf[i] = acc;
    }
    const bool static_hidden = model.has_static_hidden();
    double sum = 0.0, sum2 = 0.0;
    for (int k = 0; k < m; ++k) {
        const double u = r.uniform01() * acc;
        const std::size_t i =
            static_cast<std::size_t>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        const Theta& theta = b.value(std::min(i, b.size() - 1));
        Bits x2 = model.sample_transition(theta, s.x, a, r);
        const Theta theta2 = static_hidden ? theta : model.dynamics(theta, s.x, a);
        Obs o = model.sample_observation(theta2, x2, a, r);
        const AugState next{std::move(x2), o};
        const double x = l1_divergence(bayes_update(model, b, s, a, next), b);
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / m;
    const double var = std::max(0.0, (sum2 - m * mean * mean) / std::max(m - 1, 1));
    est.value = beta * mean;
    est.stderr_ = beta * std::sqrt(var / m);
    est.exact = false;
    return est;
}

double reward_bonus(const Model& model, const Belief& b, const AugState& s, Action a,
                    double beta, const BonusConfig& cfg, Rng* rng) {
    return reward_bonus_estimate(model, b, s, a, beta, cfg, rng).value;
}

double internal_reward(const Model& model, const Belief& b, const AugState& s, Action a,
                       double beta, const BonusConfig& cfg, Rng* rng) {
    return mean_reward(model, b, s, a) + reward_bonus(model, b, s, a, beta, cfg, rng);
}

InternalRewardModel::InternalRewardModel(const Model& model, Belief belief, double beta,
                                         BonusConfig cfg, std::uint64_t sample_seed)
    : model_(&model),
      belief_(std::move(belief)),
      beta_(beta),
      cfg_(cfg),
      sample_rng_(sample_seed) {
    if (beta_ < 0.0) throw ArgumentError("InternalRewardModel: beta must be nonnegative");
    ctx_ = model.internal_reward_context(belief_, beta_);

    // Walker alias table over the belief weights.
    const std::size_t n = belief_.size();
    alias_.assign(n, 0);
    alias_prob_.assign(n, 1.0);
    const double total = belief_.total_weight();
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i)
        scaled[i] = belief_.weight(i) * static_cast<double>(n) / total;
    std::vector<std::uint32_t> small, large;
    for (std::size_t i = n; i-- > 0;)
        (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
    while (!small.empty() && !large.empty()) {
        const std::uint32_t s = small.back();
        small.pop_back();
        const std::uint32_t l = large.back();
        alias_prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1.0;
        if (scaled[l] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    for (std::uint32_t i : large) alias_prob_[i] = 1.0;
    for (std::uint32_t i : small) alias_prob_[i] = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        if (alias_prob_[i] >= 1.0) alias_[i] = static_cast<std::uint32_t>(i);
}

double InternalRewardModel::internal_reward(const AugState& s, Action a) {
    if (ctx_) return ctx_->internal_reward(s.x, a);
    Key key{s.x, a};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const double r = mean_reward(*model_, belief_, s, a) +
                     reward_bonus(*model_, belief_, s, a, beta_, cfg_, &sample_rng_);
    memo_.emplace(std::move(key), r);
    return r;
}

std::size_t InternalRewardModel::draw_theta_index(Rng& rng) const {
    const std::size_t n = belief_.size();
    const std::size_t i = static_cast<std::size_t>(rng.uniform_int(n));
    return rng.uniform01() < alias_prob_[i] ? i : alias_[i];
}

AugState InternalRewardModel::mean_step(const AugState& s, Action a, Rng& rng) const {
    return step_with(belief_.value(draw_theta_index(rng)), s, a, rng);
}

AugState InternalRewardModel::step_with(const Theta& theta, const AugState& s, Action a,
                                        Rng& rng) const {
    Bits x2 = model_->sample_transition(theta, s.x, a, rng);
    Obs o;
    if (model_->has_static_hidden()) {
        o = model_->sample_observation(theta, x2, a, rng);
    } else {
        const Theta theta2 = model_->dynamics(theta, s.x, a);
        o = model_->sample_observation(theta2, x2, a, rng);
    }
    return AugState{std::move(x2), o};
}

void InternalRewardModel::mean_transition(const AugState& s, Action a, AugSupport& out,
                                          std::size_t support_cap) const {
    pomdplite::mean_transition(*model_, belief_, s, a, out, support_cap);
}

Belief bootstrap_resample(const Belief& b, int count, Rng& rng) {
    if (count < 1) throw ArgumentError("bootstrap_resample: count must be >= 1");
    std::vector<double> cdf(b.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        acc += b.weight(i);
        cdf[i] = acc;
    }
    if (!(acc > 0.0)) throw InconsistencyError("bootstrap_resample: belief has zero mass");
    std::vector<Theta> values;
    values.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double u = rng.uniform01() * acc;
        const std::size_t i =
            static_cast<std::size_t>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        values.push_back(b.value(std::min(i, b.size() - 1)));
    }
    return Belief::particles(std::move(values), {});
}

Belief evidence_resample(const Model& model, std::span<const EvidenceStep> evidence,
                         int count, Rng& rng) {
    if (!model.supports_evidence_resample())
        throw UnsupportedError(model.name() + ": no evidence-conditioned resampler");
    std::vector<Theta> values;
    values.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        values.push_back(model.sample_hidden_consistent(evidence, rng));
    return Belief::particles(std::move(values), {});
}

}  // namespace pomdplite

#include "pomdplite/theory.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace pomdplite {

double dirichlet_bonus_exact(const DirichletCounts& counts, double beta) {
    if (beta < 0.0) throw ArgumentError("dirichlet_bonus_exact: beta must be nonnegative");
    if (counts.alpha.empty()) throw ArgumentError("dirichlet_bonus_exact: empty counts");
    for (double a : counts.alpha)
        if (!(a > 0.0)) throw ArgumentError("dirichlet_bonus_exact: all pseudo-counts must be positive");
    const double a0 = counts.alpha0();
    const double drop = 1.0 / a0 - 1.0 / (a0 + 1.0);
    double bonus = 0.0;
    for (double ak : counts.alpha) {
        const double sum_others = (a0 - ak) * drop;
        const double gain = (ak + 1.0) / (a0 + 1.0) - ak / a0;
        bonus += (ak / a0) * (sum_others + gain);
    }
    return beta * bonus;
}

double dirichlet_bound(const DirichletCounts& counts, double beta) {
    return 2.0 * beta / (1.0 + counts.alpha0());
}

std::vector<double> dirichlet_bandit_trace(const std::vector<double>& outcome_probs,
                                           DirichletCounts start, double beta, int visits,
                                           Rng& rng) {
    if (outcome_probs.size() != start.alpha.size())
        throw ArgumentError("dirichlet_bandit_trace: dimension mismatch");
    std::vector<double> trace;
    trace.reserve(static_cast<std::size_t>(visits) + 1);
    trace.push_back(dirichlet_bonus_exact(start, beta));
    for (int v = 0; v < visits; ++v) {
        double u = rng.uniform01();
        std::size_t k = 0;
        for (; k + 1 < outcome_probs.size(); ++k) {
            if (u < outcome_probs[k]) break;
            u -= outcome_probs[k];
        }
        start.alpha[k] += 1.0;
        trace.push_back(dirichlet_bonus_exact(start, beta));
    }
    return trace;
}

bool KnownSetTracker::is_known(const AugState& s, Action a) const {
    auto it = stats_.find(SaKey{s, a});
    return it != stats_.end() && it->second.known_at >= 0;
}

const KnownSetTracker::PairStats* KnownSetTracker::stats(const AugState& s, Action a) const {
    auto it = stats_.find(SaKey{s, a});
    return it == stats_.end() ? nullptr : &it->second;
}

void known_set_step(KnownSetTracker& tracker, const Model& model, const Belief& b,
                    const AugState& s, Action a, double beta) {
    auto& ps = tracker.stats_[KnownSetTracker::SaKey{s, a}];
    const double bonus = reward_bonus(model, b, s, a, beta);
    if (!ps.bonuses.empty() && bonus > ps.bonuses.back() + 1e-12) ps.bonus_increased = true;
    if (ps.known_at < 0 && bonus < tracker.kappa_) ps.known_at = ps.visits;
    ps.visits += 1;
    ps.bonuses.push_back(bonus);
}

void known_set_observe(KnownSetTracker& tracker, const Model& model, const Belief& b,
                       const AugState& s, Action a, double beta) {
    auto& ps = tracker.stats_[KnownSetTracker::SaKey{s, a}];
    if (ps.known_at < 0 && reward_bonus(model, b, s, a, beta) < tracker.kappa_)
        ps.known_at = ps.visits;
}

SampleComplexityResult sample_complexity_experiment(const Model& model, double beta,
                                                    double kappa, int max_steps, Rng& rng,
                                                    bool freeze_known) {
    if (max_steps < 1) throw ArgumentError("sample_complexity_experiment: max_steps must be >= 1");
    KnownSetTracker tracker(kappa, freeze_known);
    SampleComplexityResult result;

    Belief b = Belief::exact_prior(model);
    AugState s = initial_aug_state(model);
    Theta theta = model.sample_hidden_prior(rng);

    ActionList acts;
    for (int t = 0; t < max_steps && !model.is_terminal(s.x); ++t) {
        model.legal_actions(s, acts);
        if (acts.empty()) break;
        // Least-visited-first sweep so every pair keeps getting exercised.
        Action a = acts[0];
        int best_visits = std::numeric_limits<int>::max();
        for (Action cand : acts) {
            const auto* ps = tracker.stats(s, cand);
            const int v = ps ? ps->visits : 0;
            if (v < best_visits) {
                best_visits = v;
                a = cand;
            }
        }

        known_set_step(tracker, model, b, s, a, beta);
        const auto* ps = tracker.stats(s, a);
        result.rows.push_back({model.format_x(s.x) + "/" + model.format_obs(s.obs),
                               model.format_action(a), ps->visits, ps->bonuses.back(),
                               ps->known_at});

        StepResult step = sample_step(model, theta, s, a, rng);
        const bool frozen = freeze_known && tracker.is_known(s, a);
        if (!frozen) {
            Belief b2 = bayes_update(model, b, s, a, step.next);
            known_set_observe(tracker, model, b2, s, a, beta);
            b = std::move(b2);
        }
        s = step.next;
        theta = std::move(step.theta_next);
        result.steps = t + 1;
    }

    for (const auto& [key, ps] : tracker.raw()) {
        const std::string name = model.format_x(key.s.x) + "/" + model.format_obs(key.s.obs) +
                                 "|" + model.format_action(key.a);
        result.zeta_hat[name] = ps.known_at;
        if (ps.bonus_increased) result.any_bonus_increase = true;
    }
    return result;
}

void write_sample_complexity_csv(std::ostream& os, const SampleComplexityResult& result) {
    os << "s,a,visit,bonus,known_at\n";
    for (const auto& row : result.rows)
        os << row.state << "," << row.action << "," << row.visit << "," << row.bonus << ","
           << row.known_at << "\n";
}

}  // namespace pomdplite

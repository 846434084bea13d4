#include "pomdplite/agent.hpp"

#include <chrono>

namespace pomdplite {
namespace {

BeliefSummary summarize_belief(const Belief& b) {
    return BeliefSummary{b.max_weight(), b.entropy(), b.effective_sample_size()};
}

std::string trajectory_context(const Model& model, const std::vector<EpisodeStep>& steps) {
    std::string out;
    for (const auto& st : steps) {
        out += " ";
        out += format_aug_state(model, st.s);
        out += " ";
        out += model.format_action(st.a);
    }
    return out;
}

}  // namespace

EpisodeRecord run_agent_loop(const Model& model, const Theta& theta_true,
                             const PolicyFn& policy, int max_steps, Rng& env_rng,
                             const AgentOptions& opts) {
    if (max_steps < 1) throw ArgumentError("run_agent_loop: max_steps must be >= 1");

    EpisodeRecord rec;
    rec.theta_true = theta_true;

    Rng belief_rng(opts.belief_seed);
    Belief b = make_prior_belief(model, opts.particle_count, belief_rng,
                                 opts.exact_belief_threshold);
    AugState s = initial_aug_state(model);
    Theta theta = theta_true;
    std::vector<EvidenceStep> evidence;
    const double gamma = model.discount();
    double disc = 1.0;
    double plan_ms = 0.0;

    for (int t = 0; t < max_steps && !model.is_terminal(s.x); ++t) {
        const auto t0 = std::chrono::steady_clock::now();
        const Action a = policy(b, s);
        plan_ms += std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();

        StepResult step = sample_step(model, theta, s, a, env_rng);
        evidence.push_back({s, a, step.next});

        Belief b2;
        try {
            b2 = bayes_update(model, b, s, a, step.next);
        } catch (const InconsistencyError& e) {
            if (b.kind() == Belief::Kind::Particle && model.supports_evidence_resample()) {
                b2 = evidence_resample(model, evidence, opts.particle_count, belief_rng);
            } else {
                throw InconsistencyError(std::string(e.what()) + "; trajectory:" +
                                         trajectory_context(model, rec.steps));
            }
        }
        if (b2.kind() == Belief::Kind::Particle &&
            b2.effective_sample_size() <
                opts.resample_fraction * static_cast<double>(b2.size())) {
            b2 = model.supports_evidence_resample()
                     ? evidence_resample(model, evidence, opts.particle_count, belief_rng)
                     : bootstrap_resample(b2, opts.particle_count, belief_rng);
        }

        rec.steps.push_back({s, a, step.reward, step.next, summarize_belief(b2)});
        rec.discounted_return += disc * step.reward;
        disc *= gamma;
        s = step.next;
        theta = std::move(step.theta_next);
        b = std::move(b2);
    }

    rec.reached_terminal = model.is_terminal(s.x);
    rec.wall_ms_per_step = rec.steps.empty() ? 0.0 : plan_ms / rec.steps.size();
    return rec;
}

EpisodeRecord run_agent_loop(const Model& model, std::int64_t theta_true_index,
                             const PolicyFn& policy, int max_steps, Rng& env_rng,
                             const AgentOptions& opts) {
    EpisodeRecord rec = run_agent_loop(model, model.hidden_value(theta_true_index), policy,
                                       max_steps, env_rng, opts);
    rec.theta_true_index = theta_true_index;
    return rec;
}

double recompute_discounted_return(const Model& model, const EpisodeRecord& rec) {
    double total = 0.0;
    double disc = 1.0;
    for (const auto& st : rec.steps) {
        total += disc * st.reward;
        disc *= model.discount();
    }
    return total;
}

}  // namespace pomdplite

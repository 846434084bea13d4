#include "pomdplite/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

namespace pomdplite {

std::string planner_name(PlannerId id) {
    switch (id) {
        case PlannerId::PomdpLite: return "pomdplite";
        case PlannerId::MeanMdp: return "meanmdp";
        case PlannerId::Qmdp: return "qmdp";
        case PlannerId::Random: return "random";
        case PlannerId::Oracle: return "oracle";
    }
    return "?";
}

std::optional<PlannerId> planner_from_name(const std::string& name) {
    if (name == "pomdplite") return PlannerId::PomdpLite;
    if (name == "meanmdp") return PlannerId::MeanMdp;
    if (name == "qmdp") return PlannerId::Qmdp;
    if (name == "random") return PlannerId::Random;
    if (name == "oracle") return PlannerId::Oracle;
    return std::nullopt;
}

Policy make_policy(const Model& model, PlannerId id, const PlannerConfig& cfg, Rng rng) {
    switch (id) {
        case PlannerId::PomdpLite:
            return {[&model, cfg, rng](const Belief& b, const AugState& s) mutable {
                        return pomdplite_policy(model, b, s, cfg, rng);
                    },
                    "pomdplite(beta=" + std::to_string(cfg.beta) + ")"};
        case PlannerId::MeanMdp:
            return {[&model, cfg, rng](const Belief& b, const AugState& s) mutable {
                        return mean_mdp_policy(model, b, s, cfg, rng);
                    },
                    "meanmdp"};
        case PlannerId::Qmdp: {
            auto sol = std::make_shared<QmdpSolution>(QmdpSolution::solve(model));
            return {[sol](const Belief& b, const AugState& s) { return sol->policy(b, s); },
                    "qmdp"};
        }
        case PlannerId::Random:
            return {[&model, rng](const Belief&, const AugState& s) mutable {
                        return random_policy(model, s, rng);
                    },
                    "random"};
        case PlannerId::Oracle:
            return {[&model, cfg](const Belief& b, const AugState& s) {
                        return bayes_optimal_oracle(model, b, s, cfg.oracle_horizon,
                                                    cfg.oracle_node_cap)
                            .action;
                    },
                    "oracle(h=" + std::to_string(cfg.oracle_horizon) + ")"};
    }
    throw ArgumentError("make_policy: unknown planner");
}

namespace {

/// QMDP shares one offline solution across episodes; other planners are
/// rebuilt per episode around their derived seed.
struct SharedPlannerState {
    std::shared_ptr<QmdpSolution> qmdp;
};

EpisodeRecord run_one(const Model& model, PlannerId id, const PlannerConfig& cfg,
                      const RunOptions& opts, const SharedPlannerState& shared,
                      std::uint64_t master_seed, int episode) {
    Rng master(master_seed);
    Rng env_rng = master.derive(3 * static_cast<std::uint64_t>(episode));
    Rng plan_rng = master.derive(3 * static_cast<std::uint64_t>(episode) + 1);
    Rng belief_rng = master.derive(3 * static_cast<std::uint64_t>(episode) + 2);

    AgentOptions agent = opts.agent;
    agent.particle_count = cfg.particle_count;
    agent.exact_belief_threshold = cfg.exact_belief_threshold;
    agent.belief_seed = belief_rng.next_u64();

    EpisodeRecord rec;
    rec.seed = master_seed ^ (0x9e3779b97f4a7c15ULL * (episode + 1));
    try {
        PolicyFn act;
        if (id == PlannerId::Qmdp) {
            auto sol = shared.qmdp;
            act = [sol](const Belief& b, const AugState& s) { return sol->policy(b, s); };
        } else {
            act = make_policy(model, id, cfg, plan_rng).act;
        }

        const std::int64_t n = model.num_hidden_values();
        if (n >= 1) {
            std::vector<double> prior;
            model.prior_weights(prior);
            double u = env_rng.uniform01();
            std::int64_t idx = n - 1;
            double acc = 0.0;
            for (std::int64_t i = 0; i < n; ++i) {
                acc += prior[i];
                if (u < acc) {
                    idx = i;
                    break;
                }
            }
            EpisodeRecord out = run_agent_loop(model, idx, act, opts.max_steps, env_rng, agent);
            out.seed = rec.seed;
            return out;
        }
        Theta theta = model.sample_hidden_prior(env_rng);
        EpisodeRecord out = run_agent_loop(model, theta, act, opts.max_steps, env_rng, agent);
        out.seed = rec.seed;
        return out;
    } catch (const std::exception& e) {
        rec.error = e.what();
        return rec;
    }
}

}  // namespace

RunResult run_episodes(const Model& model, PlannerId id, const PlannerConfig& cfg,
                       int episodes, std::uint64_t master_seed, const RunOptions& opts) {
    if (episodes < 1) throw ArgumentError("run_episodes: episodes must be >= 1");

    SharedPlannerState shared;
    if (id == PlannerId::Qmdp)
        shared.qmdp = std::make_shared<QmdpSolution>(QmdpSolution::solve(model));

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<EpisodeRecord> records(static_cast<std::size_t>(episodes));

    int threads = opts.threads > 0
                      ? opts.threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, episodes);
    if (threads <= 1) {
        for (int e = 0; e < episodes; ++e)
            records[e] = run_one(model, id, cfg, opts, shared, master_seed, e);
    } else {
        std::atomic<int> next{0};
        auto worker = [&]() {
            while (true) {
                const int e = next.fetch_add(1);
                if (e >= episodes) return;
                records[e] = run_one(model, id, cfg, opts, shared, master_seed, e);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    RunResult result;
    result.records = std::move(records);
    result.summary = summarize(model, result.records);
    result.summary.planner = planner_name(id);
    result.summary.beta = id == PlannerId::MeanMdp ? 0.0 : cfg.beta;
    result.summary.total_wall_ms = std::chrono::duration<double, std::milli>(
                                       std::chrono::steady_clock::now() - t0)
                                       .count();
    return result;
}

RunSummary summarize(const Model& model, std::span<const EpisodeRecord> records) {
    if (records.empty()) throw ArgumentError("summarize: need at least one record");
    RunSummary s;
    s.domain = model.name();
    s.episodes = static_cast<int>(records.size());
    double sum = 0.0, sum2 = 0.0;
    int ok = 0, successes = 0;
    for (const auto& r : records) {
        if (!r.error.empty()) {
            ++s.error_count;
            continue;
        }
        ++ok;
        sum += r.discounted_return;
        sum2 += r.discounted_return * r.discounted_return;
        if (r.reached_terminal && !r.steps.empty() && r.steps.back().reward > 0.0) ++successes;
    }
    if (ok > 0) {
        s.mean_return = sum / ok;
        const double var = ok > 1 ? std::max(0.0, (sum2 - ok * s.mean_return * s.mean_return) /
                                                      (ok - 1))
                                  : 0.0;
        s.stderr_ = std::sqrt(var / ok);
        s.success_rate = static_cast<double>(successes) / ok;
    }
    return s;
}

void write_episodes_csv(std::ostream& os, std::span<const EpisodeRecord> records) {
    os << "seed,theta_true,steps,return,ms_per_step,error\n";
    for (const auto& r : records) {
        os << r.seed << ",";
        if (r.theta_true_index >= 0)
            os << r.theta_true_index;
        else if (!r.theta_true.empty())
            os << "0x" << std::hex << r.theta_true[0] << std::dec;
        os << "," << r.steps.size() << "," << r.discounted_return << "," << r.wall_ms_per_step
           << "," << r.error << "\n";
    }
}

void write_summary_json(std::ostream& os, const RunSummary& s) {
    nlohmann::json j{{"domain", s.domain},
                     {"planner", s.planner},
                     {"beta", s.beta},
                     {"episodes", s.episodes},
                     {"mean_return", s.mean_return},
                     {"stderr", s.stderr_},
                     {"success_rate", s.success_rate},
                     {"total_wall_ms", s.total_wall_ms},
                     {"error_count", s.error_count}};
    os << j.dump(2) << "\n";
}

RunSummary read_summary_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    RunSummary s;
    s.domain = j.at("domain").get<std::string>();
    s.planner = j.at("planner").get<std::string>();
    s.beta = j.at("beta").get<double>();
    s.episodes = j.at("episodes").get<int>();
    s.mean_return = j.at("mean_return").get<double>();
    s.stderr_ = j.at("stderr").get<double>();
    s.success_rate = j.at("success_rate").get<double>();
    s.total_wall_ms = j.at("total_wall_ms").get<double>();
    s.error_count = j.at("error_count").get<int>();
    return s;
}

}  // namespace pomdplite

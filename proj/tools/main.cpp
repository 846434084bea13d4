#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pomdplite/domains/battleship.hpp"
#include "pomdplite/domains/chain.hpp"
#include "pomdplite/domains/rocksample.hpp"
#include "pomdplite/domains/tiger.hpp"
#include "pomdplite/harness.hpp"
#include "pomdplite/plite.hpp"
#include "pomdplite/theory.hpp"

namespace {

using namespace pomdplite;

struct DomainFlags {
    std::string domain = "tiger";
    int n = 7;
    int k = 8;
    double gamma = 0.95;
    std::uint64_t layout_seed = 0;
    int variants = 3;
    int length = 5;
};

void add_domain_flags(CLI::App& app, DomainFlags& f) {
    app.add_option("--domain", f.domain,
                   "tiger | rocksample | battleship | chain | file:<path.plite>")
        ->capture_default_str();
    app.add_option("--n", f.n, "grid size (rocksample/battleship)")->capture_default_str();
    app.add_option("--k", f.k, "rock/ship count")->capture_default_str();
    app.add_option("--gamma", f.gamma, "discount (tiger/chain)")->capture_default_str();
    app.add_option("--layout-seed", f.layout_seed, "rock layout seed for non-standard sizes");
    app.add_option("--variants", f.variants, "chain: number of hidden transition tables")
        ->capture_default_str();
    app.add_option("--length", f.length, "chain: number of cells")->capture_default_str();
}

std::shared_ptr<Model> build_domain(const DomainFlags& f) {
    if (f.domain == "tiger") return make_tiger(f.gamma);
    if (f.domain == "rocksample") return make_rocksample(f.n, f.k, f.layout_seed);
    if (f.domain == "battleship") return make_battleship(f.n, f.k);
    if (f.domain == "chain") return make_deterministic_chain(f.variants, f.length, f.gamma);
    if (f.domain.rfind("file:", 0) == 0) return parse_model_file(f.domain.substr(5));
    throw ArgumentError("unknown domain '" + f.domain + "'");
}

void apply_budget(PlannerConfig& cfg, const std::string& budget) {
    if (budget.rfind("sims:", 0) == 0) {
        cfg.uct_simulations = std::stoll(budget.substr(5));
        cfg.time_budget_ms = 0;
    } else if (budget.rfind("ms:", 0) == 0) {
        cfg.time_budget_ms = std::stoll(budget.substr(3));
    } else {
        throw ArgumentError("budget must be sims:<N> or ms:<N>");
    }
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

int cmd_run(const DomainFlags& df, const std::string& planner, PlannerConfig cfg,
            const std::string& budget, const std::string& engine, int episodes,
            std::uint64_t seed, int max_steps, int threads, const std::string& out_csv,
            const std::string& out_json) {
    apply_budget(cfg, budget);
    cfg.engine = engine == "vi" ? PlanEngine::Vi : PlanEngine::Uct;
    auto model = build_domain(df);
    auto id = planner_from_name(planner);
    if (!id) throw ArgumentError("unknown planner '" + planner + "'");

    RunOptions opts;
    opts.max_steps = max_steps;
    opts.threads = threads;
    RunResult result = run_episodes(*model, *id, cfg, episodes, seed, opts);

    const RunSummary& s = result.summary;
    std::cout << s.domain << " " << s.planner << " beta=" << s.beta << " episodes=" << s.episodes
              << " mean=" << s.mean_return << " stderr=" << s.stderr_
              << " success=" << s.success_rate << " wall_ms=" << s.total_wall_ms;
    if (s.error_count) std::cout << " ERRORS=" << s.error_count;
    std::cout << "\n";

    if (!out_csv.empty()) {
        std::ofstream os(out_csv);
        if (!os) throw ArgumentError("cannot write " + out_csv);
        write_episodes_csv(os, result.records);
    }
    if (!out_json.empty()) {
        std::ofstream os(out_json);
        if (!os) throw ArgumentError("cannot write " + out_json);
        write_summary_json(os, s);
    }
    if (s.error_count) {
        for (const auto& r : result.records)
            if (!r.error.empty()) {
                std::cerr << "episode error: " << r.error << "\n";
                break;
            }
        return 3;
    }
    return 0;
}

int cmd_solve(const std::string& model_path, const std::string& belief_csv, double beta,
              double tol) {
    auto model = parse_model_file(model_path);
    Belief b = Belief::exact_prior(*model);
    if (!belief_csv.empty()) {
        std::vector<double> w = parse_number_list(belief_csv);
        if (w.size() != static_cast<std::size_t>(model->num_hidden_values()))
            throw ArgumentError("--belief needs one weight per hidden value");
        b = Belief::exact(std::move(w), b.values());
    }
    PlannerConfig cfg;
    cfg.beta = beta;
    cfg.vi_tolerance = tol;
    ValueTable table = solve_internal_vi(*model, b, cfg);

    std::vector<std::pair<std::string, const ValueTable::Entry*>> rows;
    for (const auto& [s, entry] : table.entries())
        rows.emplace_back(format_aug_state(*model, s), &entry);
    std::sort(rows.begin(), rows.end());
    std::cout << "internal-reward Q (beta=" << beta << ", residual=" << table.residual
              << ", iters=" << table.iterations << ")\n";
    for (const auto& [name, entry] : rows) {
        std::cout << name << ":";
        for (std::size_t i = 0; i < entry->actions.size(); ++i)
            std::cout << " " << model->format_action(entry->actions[i]) << "="
                      << entry->q[i];
        std::cout << "\n";
    }
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"POMDP-lite planning benchmark"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "benchmark a planner on a domain");
    DomainFlags df;
    add_domain_flags(*run, df);
    std::string planner = "pomdplite", budget = "sims:10000", engine = "uct";
    std::string out_csv, out_json;
    PlannerConfig cfg;
    int episodes = 100, max_steps = 1000, threads = 0;
    std::uint64_t seed = 1;
    run->add_option("--planner", planner, "pomdplite | meanmdp | qmdp | random | oracle")
        ->capture_default_str();
    run->add_option("--beta", cfg.beta, "exploration bonus scale")->capture_default_str();
    run->add_option("--episodes", episodes)->capture_default_str();
    run->add_option("--seed", seed, "master seed")->capture_default_str();
    run->add_option("--budget", budget, "per-step planning budget, sims:<N> or ms:<N>")
        ->capture_default_str();
    run->add_option("--engine", engine, "internal MDP solver: uct | vi")->capture_default_str();
    run->add_option("--uct-c", cfg.uct_exploration_c, "UCT exploration constant (0 = domain default)");
    run->add_option("--depth-cap", cfg.rollout_depth_cap, "rollout depth cap (0 = domain default)");
    run->add_option("--particles", cfg.particle_count, "particle count for large hidden spaces")
        ->capture_default_str();
    run->add_option("--oracle-horizon", cfg.oracle_horizon)->capture_default_str();
    run->add_option("--max-steps", max_steps)->capture_default_str();
    run->add_option("--threads", threads, "episode workers (0 = cores)");
    run->add_option("--out-csv", out_csv, "per-episode CSV path");
    run->add_option("--out-json", out_json, "summary JSON path");
    run->add_flag("--theta-persistence", cfg.theta_persistence,
                  "ablation: pin one theta draw per UCT simulation");

    // theory
    auto* theory = app.add_subcommand("theory", "executable theory checks");
    theory->require_subcommand(1);
    auto* dirichlet = theory->add_subcommand("dirichlet", "Dirichlet bonus closed form");
    std::string alpha_csv = "1,1", probs_csv;
    double th_beta = 1.0;
    int trace_len = 0;
    std::uint64_t th_seed = 1;
    dirichlet->add_option("--alpha", alpha_csv, "pseudo-counts, comma separated")
        ->capture_default_str();
    dirichlet->add_option("--beta", th_beta)->capture_default_str();
    dirichlet->add_option("--trace", trace_len, "also simulate N outcome draws");
    dirichlet->add_option("--probs", probs_csv, "true outcome probabilities for --trace");
    dirichlet->add_option("--seed", th_seed)->capture_default_str();

    auto* sc = theory->add_subcommand("sample-complexity", "known-set growth experiment");
    DomainFlags sc_df;
    sc_df.domain = "chain";
    add_domain_flags(*sc, sc_df);
    double sc_beta = 1.0, sc_kappa = 0.005;
    int sc_steps = 200;
    std::uint64_t sc_seed = 1;
    bool sc_freeze = false;
    std::string sc_csv;
    sc->add_option("--beta", sc_beta)->capture_default_str();
    sc->add_option("--kappa", sc_kappa, "known threshold (default eps*(1-gamma), eps=0.1)")
        ->capture_default_str();
    sc->add_option("--max-steps", sc_steps)->capture_default_str();
    sc->add_option("--seed", sc_seed)->capture_default_str();
    sc->add_flag("--freeze", sc_freeze, "skip belief updates for known pairs");
    sc->add_option("--out-csv", sc_csv);

    // solve
    auto* solve = app.add_subcommand("solve", "print the internal-reward Q table for a model");
    std::string model_path, belief_csv;
    double solve_beta = 1.0, solve_tol = 1e-9;
    solve->add_option("--model", model_path, ".plite model file")->required();
    solve->add_option("--belief", belief_csv, "weights over params, comma separated");
    solve->add_option("--beta", solve_beta)->capture_default_str();
    solve->add_option("--tol", solve_tol)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed())
        return cmd_run(df, planner, cfg, budget, engine, episodes, seed, max_steps, threads,
                       out_csv, out_json);

    if (dirichlet->parsed()) {
        DirichletCounts counts{parse_number_list(alpha_csv)};
        std::cout << "exact=" << dirichlet_bonus_exact(counts, th_beta)
                  << " bound=" << dirichlet_bound(counts, th_beta) << "\n";
        if (trace_len > 0) {
            std::vector<double> probs = probs_csv.empty()
                                            ? std::vector<double>(counts.alpha.size(),
                                                                  1.0 / counts.alpha.size())
                                            : parse_number_list(probs_csv);
            Rng rng(th_seed);
            auto trace = dirichlet_bandit_trace(probs, counts, th_beta, trace_len, rng);
            for (std::size_t i = 0; i < trace.size(); ++i)
                std::cout << i << "," << trace[i] << "\n";
        }
        return 0;
    }

    if (sc->parsed()) {
        auto model = build_domain(sc_df);
        Rng rng(sc_seed);
        auto result = sample_complexity_experiment(*model, sc_beta, sc_kappa, sc_steps, rng,
                                                   sc_freeze);
        long max_zeta = -1;
        for (const auto& [pair, zeta] : result.zeta_hat) max_zeta = std::max(max_zeta, zeta);
        std::cout << "steps=" << result.steps << " pairs=" << result.zeta_hat.size()
                  << " max_zeta=" << max_zeta
                  << " bonus_increase=" << (result.any_bonus_increase ? "yes" : "no") << "\n";
        if (!sc_csv.empty()) {
            std::ofstream os(sc_csv);
            if (!os) throw ArgumentError("cannot write " + sc_csv);
            write_sample_complexity_csv(os, result);
        }
        return 0;
    }

    if (solve->parsed()) return cmd_solve(model_path, belief_csv, solve_beta, solve_tol);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 3;
    } catch (const InconsistencyError& e) {
        std::cerr << "model inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const ConvergenceError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#pragma once

#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "pomdplite/agent.hpp"

namespace pomdplite {

/// Pseudo-counts of an independent Dirichlet prior over one (s, a) pair's
/// next-state distribution.
struct DirichletCounts {
    std::vector<double> alpha;

    double alpha0() const {
        double t = 0.0;
        for (double a : alpha) t += a;
        return t;
    }
};

/// Exact expected L1 divergence between the Dirichlet posterior predictive
/// before and after one more observed outcome, scaled by beta:
///   beta * sum_k (a_k/a0) * [ sum_{j!=k} a_j (1/a0 - 1/(a0+1))
///                             + ((a_k+1)/(a0+1) - a_k/a0) ].
double dirichlet_bonus_exact(const DirichletCounts& counts, double beta);

/// The decay-rate bound 2*beta / (1 + alpha0); always >= the exact bonus.
double dirichlet_bound(const DirichletCounts& counts, double beta);

/// Exact bonuses along a simulated bandit: outcomes drawn from
/// `outcome_probs`, pseudo-counts incremented per draw. trace[0] is the
/// bonus at `start`.
std::vector<double> dirichlet_bandit_trace(const std::vector<double>& outcome_probs,
                                           DirichletCounts start, double beta, int visits,
                                           Rng& rng);

/// Visit counts and known-set bookkeeping for (s, a) pairs: a pair becomes
/// known once its reward bonus falls below kappa. When freezing is enabled,
/// the experiment loop skips belief updates for known pairs.
class KnownSetTracker {
public:
    struct PairStats {
        int visits = 0;
        long known_at = -1;           // visit count consumed before knowledge; -1 = unknown
        std::vector<double> bonuses;  // one entry per visit (pre-update bonus)
        bool bonus_increased = false; // flagged, not fatal (monotonicity is an assumption)
    };

    struct SaKey {
        AugState s;
        Action a;
        bool operator==(const SaKey&) const = default;
    };
    struct SaKeyHash {
        std::size_t operator()(const SaKey& k) const {
            return AugStateHash{}(k.s) * 0x100000001b3ULL + static_cast<std::size_t>(k.a + 1);
        }
    };

    explicit KnownSetTracker(double kappa, bool freeze_known = false)
        : kappa_(kappa), freeze_known_(freeze_known) {}

    double kappa() const { return kappa_; }
    bool freeze_known() const { return freeze_known_; }
    bool is_known(const AugState& s, Action a) const;
    const PairStats* stats(const AugState& s, Action a) const;
    const std::unordered_map<SaKey, PairStats, SaKeyHash>& raw() const { return stats_; }

    friend void known_set_step(KnownSetTracker&, const Model&, const Belief&,
                               const AugState&, Action, double);
    friend void known_set_observe(KnownSetTracker&, const Model&, const Belief&,
                                  const AugState&, Action, double);

private:
    double kappa_;
    bool freeze_known_;
    std::unordered_map<SaKey, PairStats, SaKeyHash> stats_;
};

/// One visit of (s, a): records the bonus at the current belief, marks the
/// pair known when that bonus is below kappa, then increments n(s, a).
void known_set_step(KnownSetTracker& tracker, const Model& model, const Belief& b,
                    const AugState& s, Action a, double beta);

/// Post-update check (no increment): marks the pair known when the bonus at
/// the new belief dropped below kappa.
void known_set_observe(KnownSetTracker& tracker, const Model& model, const Belief& b,
                       const AugState& s, Action a, double beta);

struct SampleComplexityRow {
    std::string state;
    std::string action;
    int visit;
    double bonus;
    long known_at;  // -1 while unknown at the time of the visit
};

struct SampleComplexityResult {
    std::vector<SampleComplexityRow> rows;
    /// Empirical zeta-hat per visited pair: visits consumed before the bonus
    /// fell below kappa (-1 when it never did within max_steps).
    std::unordered_map<std::string, long> zeta_hat;
    bool any_bonus_increase = false;
    int steps = 0;
};

/// Walks the model (least-visited legal action first), tracking per-(s, a)
/// bonus traces and known-set growth under the model's own prior.
SampleComplexityResult sample_complexity_experiment(const Model& model, double beta,
                                                    double kappa, int max_steps, Rng& rng,
                                                    bool freeze_known = false);

/// Columns: s, a, visit, bonus, known_at.
void write_sample_complexity_csv(std::ostream& os, const SampleComplexityResult& result);

}  // namespace pomdplite

#pragma once

#include <memory>
#include <vector>

#include "pomdplite/model.hpp"

namespace pomdplite {

/// Battleship(n, k): k ships of sizes (k+1)x1 .. 2x1 hidden in an n x n grid,
/// no two ships adjacent (including diagonally). Each step fires one unfired
/// cell for -1 and observes hit (1) or miss (0) exactly; sinking every ship
/// cell pays a terminal n*n. Discount 1. The hidden parameter is the ship
/// configuration, encoded as the occupancy mask (the non-adjacency rule makes
/// mask and placement interchangeable).
///
/// The prior is uniform over legal configurations, realized by rejection
/// sampling; the hidden space is never enumerated. Evidence-conditioned
/// resampling rebuilds layouts that cover every observed hit and avoid every
/// observed miss.
class BattleshipModel final : public Model {
public:
    BattleshipModel(int n, int k);

    std::string name() const override;
    double discount() const override { return 1.0; }
    int num_actions() const override { return n_ * n_; }

    std::int64_t num_hidden_values() const override { return -1; }
    Theta sample_hidden_prior(Rng& rng) const override;
    bool supports_evidence_resample() const override { return true; }
    Theta sample_hidden_consistent(std::span<const EvidenceStep> evidence,
                                   Rng& rng) const override;

    Bits initial_x() const override;
    bool is_terminal(const Bits& x) const override;
    void legal_actions(const AugState& s, ActionList& out) const override;
    double reward(const Theta& theta, const Bits& x, Action a) const override;
    void transition_support(const Theta& theta, const Bits& x, Action a,
                            StateSupport& out) const override;
    void observation_support(const Theta& theta, const Bits& x2, Action a,
                             ObsSupport& out) const override;
    double transition_prob(const Theta& theta, const Bits& x, Action a,
                           const Bits& x2) const override;
    double observation_prob(const Theta& theta, const Bits& x2, Action a,
                            Obs o) const override;
    Bits sample_transition(const Theta& theta, const Bits& x, Action a,
                           Rng& rng) const override;
    Obs sample_observation(const Theta& theta, const Bits& x2, Action a,
                           Rng& rng) const override;

    std::unique_ptr<InternalRewardContext> internal_reward_context(const Belief& belief,
                                                                   double beta) const override;

    double suggested_exploration() const override { return static_cast<double>(n_ * n_); }
    int suggested_depth_cap() const override { return n_ * n_; }

    std::string format_x(const Bits& x) const override;
    std::string format_action(Action a) const override;
    std::string format_obs(Obs o) const override;

    static constexpr Obs kObsMiss = 0;
    static constexpr Obs kObsHit = 1;

    int grid_size() const { return n_; }
    int ship_count() const { return k_; }
    int total_ship_cells() const { return total_cells_; }
    int mask_words() const { return words_; }

    bool occupied(const Theta& theta, int cell) const { return get_bit(theta, cell); }
    bool fired(const Bits& x, int cell) const { return get_bit(x, cell); }
    bool hit(const Bits& x, int cell) const {
        return (x[words_ + (cell >> 6)] >> (cell & 63)) & 1u;
    }
    int hit_count(const Bits& x) const;

private:
    struct Placement {
        Bits cells;    // occupied cells
        Bits blocked;  // cells plus their 8-neighborhood
    };

    Bits next_x(const Theta& theta, const Bits& x, Action a) const;
    Bits empty_mask() const;
    Theta sample_layout(const Bits& miss_mask, const Bits& hit_mask, Rng& rng,
                        int max_attempts) const;

    int n_;
    int k_;
    int words_;
    int total_cells_;
    std::vector<int> sizes_;                            // per ship
    std::vector<std::vector<Placement>> placements_;    // per ship
    std::vector<std::vector<std::vector<int>>> cover_;  // per ship, per cell: placement ids
};

std::shared_ptr<BattleshipModel> make_battleship(int n, int k);

}  // namespace pomdplite

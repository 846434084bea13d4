#pragma once

#include <memory>
#include <vector>

#include "pomdplite/model.hpp"

namespace pomdplite {

/// RockSample(n, k): a rover on an n x n grid with k rocks, each good or bad
/// with probability 0.5 (the static hidden parameter). Moves are
/// deterministic; sampling a rock pays +10/-10 by its quality and consumes
/// it; crossing the east edge ends the episode with +10. Sensing a rock is
/// free and reports its quality with accuracy (1 + 2^(-d/d0)) / 2 at
/// Euclidean distance d, d0 = 20. Moves and samples produce the null
/// observation; only sensing is informative.
///
/// The standard benchmark layouts are used for (7,8), (11,11) and (15,15);
/// other sizes place rocks from layout_seed.
class RockSampleModel final : public Model {
public:
    RockSampleModel(int n, int k, std::uint64_t layout_seed);

    std::string name() const override;
    double discount() const override { return 0.95; }
    int num_actions() const override { return 5 + k_; }

    std::int64_t num_hidden_values() const override {
        return k_ <= 12 ? (std::int64_t{1} << k_) : -1;
    }
    Theta sample_hidden_prior(Rng& rng) const override;

    Bits initial_x() const override;
    bool is_terminal(const Bits& x) const override { return pos_of(x) == n_ * n_; }
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

    double suggested_exploration() const override { return 20.0; }

    std::string format_x(const Bits& x) const override;
    std::string format_action(Action a) const override;
    std::string format_obs(Obs o) const override;

    // Action codes.
    static constexpr Action kNorth = 0;
    static constexpr Action kEast = 1;
    static constexpr Action kSouth = 2;
    static constexpr Action kWest = 3;
    static constexpr Action kSample = 4;
    static Action sense_action(int rock) { return 5 + rock; }

    static constexpr Obs kObsBad = 0;
    static constexpr Obs kObsGood = 1;

    int grid_size() const { return n_; }
    int rock_count() const { return k_; }
    std::pair<int, int> rock_position(int rock) const { return rocks_[rock]; }
    int rock_at(int pos) const { return rock_at_[pos]; }

    double sense_accuracy(int pos, int rock) const;

private:
    Bits next_x(const Bits& x, Action a) const;
    int pos_of(const Bits& x) const { return static_cast<int>(x[0] & 0xffff); }
    bool collected(const Bits& x, int rock) const { return (x[0] >> (16 + rock)) & 1u; }
    static bool rock_good(const Theta& theta, int rock) { return (theta[0] >> rock) & 1u; }

    int n_;
    int k_;
    std::vector<std::pair<int, int>> rocks_;  // (cx, cy), cx increases eastward
    std::vector<int> rock_at_;                // per cell: rock index or -1
    int start_pos_;
};

std::shared_ptr<RockSampleModel> make_rocksample(int n, int k, std::uint64_t layout_seed = 0);

}  // namespace pomdplite

#include "pomdplite/domains/rocksample.hpp"

#include <cmath>

#include "pomdplite/belief.hpp"

namespace pomdplite {
namespace {

struct Layout {
    int n, k;
    std::pair<int, int> start;
    std::vector<std::pair<int, int>> rocks;
};

// Standard benchmark layouts (x east, y north).
const Layout kCanonical[] = {
    {7, 8, {0, 3}, {{2, 0}, {0, 1}, {3, 1}, {6, 3}, {2, 4}, {3, 4}, {5, 5}, {1, 6}}},
    {11,
     11,
     {0, 5},
     {{0, 3}, {0, 7}, {1, 8}, {2, 4}, {3, 3}, {3, 8}, {4, 3}, {5, 8}, {6, 1}, {9, 3}, {9, 9}}},
    {15,
     15,
     {0, 7},
     {{0, 4},
      {0, 11},
      {1, 8},
      {2, 4},
      {2, 12},
      {3, 9},
      {4, 3},
      {5, 14},
      {6, 0},
      {6, 8},
      {9, 3},
      {10, 2},
      {11, 7},
      {12, 12},
      {14, 9}}},
};

}  // namespace

RockSampleModel::RockSampleModel(int n, int k, std::uint64_t layout_seed) : n_(n), k_(k) {
    if (n < 2) throw ArgumentError("RockSample: grid size must be >= 2");
    if (k < 1 || k > 20) throw ArgumentError("RockSample: rock count must be in [1, 20]");
    if (k > n * n) throw ArgumentError("RockSample: more rocks than cells");

    start_pos_ = (n / 2) * n + 0;
    const Layout* canonical = nullptr;
    for (const auto& l : kCanonical)
        if (l.n == n && l.k == k) canonical = &l;
    if (canonical) {
        rocks_ = canonical->rocks;
        start_pos_ = canonical->start.second * n + canonical->start.first;
    } else {
        Rng rng(layout_seed ^ 0x70c45ULL);
        std::vector<bool> used(static_cast<std::size_t>(n) * n, false);
        while (static_cast<int>(rocks_.size()) < k) {
            const int cell = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n) * n));
            if (used[cell] || cell == start_pos_) continue;
            used[cell] = true;
            rocks_.emplace_back(cell % n, cell / n);
        }
    }
    rock_at_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < k; ++i) rock_at_[rocks_[i].second * n + rocks_[i].first] = i;
}

std::string RockSampleModel::name() const {
    return "rocksample(" + std::to_string(n_) + "," + std::to_string(k_) + ")";
}

Theta RockSampleModel::sample_hidden_prior(Rng& rng) const {
    return bits_of(rng.next_u64() & ((std::uint64_t{1} << k_) - 1));
}

Bits RockSampleModel::initial_x() const { return bits_of(static_cast<std::uint64_t>(start_pos_)); }

double RockSampleModel::sense_accuracy(int pos, int rock) const {
    const double dx = static_cast<double>(pos % n_ - rocks_[rock].first);
    const double dy = static_cast<double>(pos / n_ - rocks_[rock].second);
    const double d = std::sqrt(dx * dx + dy * dy);
    return 0.5 * (1.0 + std::exp2(-d / 20.0));
}

void RockSampleModel::legal_actions(const AugState& s, ActionList& out) const {
    out.clear();
    const int pos = pos_of(s.x);
    if (pos == n_ * n_) return;
    const int cx = pos % n_, cy = pos / n_;
    if (cy + 1 < n_) out.push_back(kNorth);
    out.push_back(kEast);  // exits the map from the east column
    if (cy > 0) out.push_back(kSouth);
    if (cx > 0) out.push_back(kWest);
    const int rock = rock_at_[pos];
    if (rock >= 0 && !collected(s.x, rock)) out.push_back(kSample);
    for (int i = 0; i < k_; ++i) out.push_back(sense_action(i));
}

double RockSampleModel::reward(const Theta& theta, const Bits& x, Action a) const {
    const int pos = pos_of(x);
    if (a == kEast && pos % n_ == n_ - 1) return 10.0;
    if (a == kSample) {
        const int rock = rock_at_[pos];
        if (rock < 0 || collected(x, rock)) return 0.0;
        return rock_good(theta, rock) ? 10.0 : -10.0;
    }
    return 0.0;
}

void RockSampleModel::transition_support(const Theta&, const Bits& x, Action a,
                                         StateSupport& out) const {
    out.clear();
    out.push_back({next_x(x, a), 1.0});
}

Bits RockSampleModel::sample_transition(const Theta&, const Bits& x, Action a, Rng&) const {
    return next_x(x, a);
}

Bits RockSampleModel::next_x(const Bits& x, Action a) const {
    const int pos = pos_of(x);
    const int cx = pos % n_, cy = pos / n_;
    std::uint64_t word = x[0];
    switch (a) {
        case kNorth:
            if (cy + 1 < n_) word += static_cast<std::uint64_t>(n_);
            break;
        case kEast:
            if (cx + 1 < n_)
                word += 1;
            else
                word = static_cast<std::uint64_t>(n_) * n_;  // exit, flags cleared
            break;
        case kSouth:
            if (cy > 0) word -= static_cast<std::uint64_t>(n_);
            break;
        case kWest:
            if (cx > 0) word -= 1;
            break;
        case kSample: {
            const int rock = rock_at_[pos];
            if (rock >= 0) word |= (std::uint64_t{1} << (16 + rock));
            break;
        }
        default:
            break;  // sensing does not move
    }
    return bits_of(word);
}

void RockSampleModel::observation_support(const Theta& theta, const Bits& x2, Action a,
                                          ObsSupport& out) const {
    out.clear();
    const int pos = pos_of(x2);
    if (a < 5 || pos == n_ * n_) {
        out.push_back({kNullObs, 1.0});
        return;
    }
    const int rock = a - 5;
    const double eff = sense_accuracy(pos, rock);
    const double p_good = rock_good(theta, rock) ? eff : 1.0 - eff;
    out.push_back({kObsBad, 1.0 - p_good});
    out.push_back({kObsGood, p_good});
}

double RockSampleModel::transition_prob(const Theta&, const Bits& x, Action a,
                                        const Bits& x2) const {
    return next_x(x, a) == x2 ? 1.0 : 0.0;
}

double RockSampleModel::observation_prob(const Theta& theta, const Bits& x2, Action a,
                                         Obs o) const {
    const int pos = pos_of(x2);
    if (a < 5 || pos == n_ * n_) return o == kNullObs ? 1.0 : 0.0;
    if (o != kObsBad && o != kObsGood) return 0.0;
    const int rock = a - 5;
    const double eff = sense_accuracy(pos, rock);
    const double p_good = rock_good(theta, rock) ? eff : 1.0 - eff;
    return o == kObsGood ? p_good : 1.0 - p_good;
}

Obs RockSampleModel::sample_observation(const Theta& theta, const Bits& x2, Action a,
                                        Rng& rng) const {
    const int pos = pos_of(x2);
    if (a < 5 || pos == n_ * n_) return kNullObs;
    const int rock = a - 5;
    const double eff = sense_accuracy(pos, rock);
    const double p_good = rock_good(theta, rock) ? eff : 1.0 - eff;
    return rng.uniform01() < p_good ? kObsGood : kObsBad;
}

namespace {

class RockSampleContext final : public InternalRewardContext {
public:
    RockSampleContext(const RockSampleModel& m, const Belief& belief, double beta)
        : m_(m), beta_(beta) {
        marginals_.assign(static_cast<std::size_t>(m.rock_count()), 0.0);
        double total = 0.0;
        for (std::size_t i = 0; i < belief.size(); ++i) {
            const double w = belief.weight(i);
            if (w <= 0.0) continue;
            total += w;
            const std::uint64_t theta = belief.value(i)[0];
            for (int r = 0; r < m.rock_count(); ++r)
                if ((theta >> r) & 1u) marginals_[r] += w;
        }
        if (total > 0.0)
            for (double& p : marginals_) p /= total;
    }

    double internal_reward(const Bits& x, Action a) const override {
        const int n = m_.grid_size();
        const int pos = static_cast<int>(x[0] & 0xffff);
        if (a == RockSampleModel::kEast && pos % n == n - 1) return 10.0;
        if (a == RockSampleModel::kSample) {
            const int rock = m_.rock_at(pos);
            if (rock < 0 || ((x[0] >> (16 + rock)) & 1u)) return 0.0;
            return 10.0 * (2.0 * marginals_[rock] - 1.0);
        }
        if (a >= 5) {
            // Expected L1 shrinkage of a two-valued marginal under a noisy
            // read with accuracy q: 4 p (1-p) (2q - 1).
            const int rock = a - 5;
            const double p = marginals_[rock];
            const double q = m_.sense_accuracy(pos, rock);
            return beta_ * 4.0 * p * (1.0 - p) * (2.0 * q - 1.0);
        }
        return 0.0;
    }

private:
    const RockSampleModel& m_;
    double beta_;
    std::vector<double> marginals_;
};

}  // namespace

std::unique_ptr<InternalRewardContext> RockSampleModel::internal_reward_context(
    const Belief& belief, double beta) const {
    return std::make_unique<RockSampleContext>(*this, belief, beta);
}

std::string RockSampleModel::format_x(const Bits& x) const {
    const int pos = pos_of(x);
    std::string s = pos == n_ * n_
                        ? "exit"
                        : "(" + std::to_string(pos % n_) + "," + std::to_string(pos / n_) + ")";
    s += "/";
    for (int i = 0; i < k_; ++i) s += collected(x, i) ? '1' : '0';
    return s;
}

std::string RockSampleModel::format_action(Action a) const {
    switch (a) {
        case kNorth: return "north";
        case kEast: return "east";
        case kSouth: return "south";
        case kWest: return "west";
        case kSample: return "sample";
        default: return "sense" + std::to_string(a - 5);
    }
}

std::string RockSampleModel::format_obs(Obs o) const {
    if (o == kNullObs) return "null";
    return o == kObsGood ? "good" : "bad";
}

std::shared_ptr<RockSampleModel> make_rocksample(int n, int k, std::uint64_t layout_seed) {
    return std::make_shared<RockSampleModel>(n, k, layout_seed);
}

}  // namespace pomdplite

#include "pomdplite/domains/battleship.hpp"

#include <algorithm>

#include "pomdplite/belief.hpp"

namespace pomdplite {
namespace {

bool intersects(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

void or_into(Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

void andnot_into(Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] &= ~b[i];
}

bool any(const Bits& a) {
    for (std::uint64_t w : a)
        if (w) return true;
    return false;
}

int lowest_bit(const Bits& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) return static_cast<int>(i * 64 + std::countr_zero(a[i]));
    return -1;
}

}  // namespace

BattleshipModel::BattleshipModel(int n, int k) : n_(n), k_(k) {
    if (n < 2 || n > 15) throw ArgumentError("Battleship: grid size must be in [2, 15]");
    if (k < 1) throw ArgumentError("Battleship: ship count must be >= 1");
    if (k + 1 > n) throw ArgumentError("Battleship: largest ship does not fit the grid");
    words_ = (n * n + 63) / 64;

    total_cells_ = 0;
    for (int i = 0; i < k; ++i) {
        sizes_.push_back(k + 1 - i);
        total_cells_ += k + 1 - i;
    }

    placements_.resize(static_cast<std::size_t>(k));
    cover_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int len = sizes_[i];
        cover_[i].resize(static_cast<std::size_t>(n) * n);
        for (int vertical = 0; vertical < 2; ++vertical) {
            const int max_r = vertical ? n - len : n - 1;
            const int max_c = vertical ? n - 1 : n - len;
            for (int r = 0; r <= max_r; ++r) {
                for (int c = 0; c <= max_c; ++c) {
                    Placement p{empty_mask(), empty_mask()};
                    for (int j = 0; j < len; ++j) {
                        const int rr = r + (vertical ? j : 0);
                        const int cc = c + (vertical ? 0 : j);
                        set_bit(p.cells, rr * n + cc, true);
                        for (int dr = -1; dr <= 1; ++dr)
                            for (int dc = -1; dc <= 1; ++dc) {
                                const int br = rr + dr, bc = cc + dc;
                                if (br >= 0 && br < n && bc >= 0 && bc < n)
                                    set_bit(p.blocked, br * n + bc, true);
                            }
                    }
                    const int pid = static_cast<int>(placements_[i].size());
                    for (int cell = 0; cell < n * n; ++cell)
                        if (get_bit(p.cells, cell)) cover_[i][cell].push_back(pid);
                    placements_[i].push_back(std::move(p));
                }
            }
        }
        if (placements_[i].empty())
            throw ArgumentError("Battleship: ship of size " + std::to_string(len) +
                                " does not fit");
    }

    // Existence probe for a legal joint configuration.
    Rng probe(0xb5b5u);
    try {
        sample_layout(empty_mask(), empty_mask(), probe, 10'000);
    } catch (const InconsistencyError&) {
        throw ArgumentError("Battleship: no legal ship configuration for n=" +
                            std::to_string(n) + ", k=" + std::to_string(k));
    }
}

std::string BattleshipModel::name() const {
    return "battleship(" + std::to_string(n_) + "," + std::to_string(k_) + ")";
}

Bits BattleshipModel::empty_mask() const {
    Bits b;
    b.resize(static_cast<std::size_t>(words_), 0);
    return b;
}

Theta BattleshipModel::sample_layout(const Bits& miss_mask, const Bits& hit_mask, Rng& rng,
                                     int max_attempts) const {
    boost::container::small_vector<int, 8> order;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Bits occupied = empty_mask();
        Bits blocked = miss_mask;  // ships never sit on observed misses
        Bits uncovered = hit_mask;
        std::uint32_t remaining = (1u << k_) - 1;
        bool failed = false;

        // Cover every observed hit first.
        while (any(uncovered) && !failed) {
            const int target = lowest_bit(uncovered);
            // Candidate (ship, placement) pairs covering the target without
            // touching placed ships, misses, or stranding another hit in the
            // new ship's halo.
            boost::container::small_vector<std::pair<int, int>, 32> candidates;
            for (int i = 0; i < k_; ++i) {
                if (!((remaining >> i) & 1u)) continue;
                for (int pid : cover_[i][target]) {
                    const Placement& p = placements_[i][pid];
                    if (intersects(p.cells, blocked) || intersects(p.cells, occupied)) continue;
                    Bits stranded = uncovered;
                    andnot_into(stranded, p.cells);
                    if (intersects(p.blocked, stranded)) continue;
                    candidates.emplace_back(i, pid);
                }
            }
            if (candidates.empty()) {
                failed = true;
                break;
            }
            const auto [i, pid] = candidates[rng.uniform_int(candidates.size())];
            const Placement& p = placements_[i][pid];
            or_into(occupied, p.cells);
            or_into(blocked, p.blocked);
            andnot_into(uncovered, p.cells);
            remaining &= ~(1u << i);
        }
        if (failed) continue;

        // Place the remaining ships anywhere feasible, largest first.
        order.clear();
        for (int i = 0; i < k_; ++i)
            if ((remaining >> i) & 1u) order.push_back(i);
        for (int i : order) {
            boost::container::small_vector<int, 64> feasible;
            for (int pid = 0; pid < static_cast<int>(placements_[i].size()); ++pid) {
                const Placement& p = placements_[i][pid];
                if (!intersects(p.cells, blocked) && !intersects(p.cells, occupied))
                    feasible.push_back(pid);
            }
            if (feasible.empty()) {
                failed = true;
                break;
            }
            const Placement& p = placements_[i][feasible[rng.uniform_int(feasible.size())]];
            or_into(occupied, p.cells);
            or_into(blocked, p.blocked);
        }
        if (!failed) return occupied;
    }
    throw InconsistencyError(name() + ": could not sample a layout consistent with the evidence");
}

Theta BattleshipModel::sample_hidden_prior(Rng& rng) const {
    // Independent uniform proposals per ship with global rejection keep the
    // accepted distribution uniform over legal configurations.
    for (int attempt = 0; attempt < 100'000; ++attempt) {
        Bits occupied = empty_mask();
        Bits blocked = empty_mask();
        bool ok = true;
        for (int i = 0; i < k_ && ok; ++i) {
            const Placement& p = placements_[i][rng.uniform_int(placements_[i].size())];
            if (intersects(p.cells, blocked) || intersects(p.cells, occupied))
                ok = false;
            else {
                or_into(occupied, p.cells);
                or_into(blocked, p.blocked);
            }
        }
        if (ok) return occupied;
    }
    throw InconsistencyError(name() + ": prior rejection sampling failed");
}

Theta BattleshipModel::sample_hidden_consistent(std::span<const EvidenceStep> evidence,
                                                Rng& rng) const {
    Bits miss = empty_mask(), hits = empty_mask();
    for (const auto& ev : evidence)
        set_bit(ev.next.obs == kObsHit ? hits : miss, static_cast<std::size_t>(ev.a), true);
    return sample_layout(miss, hits, rng, 256);
}

Bits BattleshipModel::initial_x() const {
    Bits b;
    b.resize(static_cast<std::size_t>(2 * words_), 0);
    return b;
}

int BattleshipModel::hit_count(const Bits& x) const {
    int c = 0;
    for (int i = 0; i < words_; ++i) c += std::popcount(x[words_ + i]);
    return c;
}

bool BattleshipModel::is_terminal(const Bits& x) const {
    return hit_count(x) >= total_cells_;
}

void BattleshipModel::legal_actions(const AugState& s, ActionList& out) const {
    out.clear();
    if (is_terminal(s.x)) return;
    for (int cell = 0; cell < n_ * n_; ++cell)
        if (!get_bit(s.x, cell)) out.push_back(cell);
}

double BattleshipModel::reward(const Theta& theta, const Bits& x, Action a) const {
    double r = -1.0;
    if (occupied(theta, a) && hit_count(x) + 1 == total_cells_)
        r += static_cast<double>(n_ * n_);
    return r;
}

Bits BattleshipModel::next_x(const Theta& theta, const Bits& x, Action a) const {
    Bits x2 = x;
    set_bit(x2, static_cast<std::size_t>(a), true);
    if (occupied(theta, a)) {
        const std::size_t bit = static_cast<std::size_t>(a);
        x2[words_ + (bit >> 6)] |= (std::uint64_t{1} << (bit & 63));
    }
    return x2;
}

void BattleshipModel::transition_support(const Theta& theta, const Bits& x, Action a,
                                         StateSupport& out) const {
    out.clear();
    out.push_back({next_x(theta, x, a), 1.0});
}

void BattleshipModel::observation_support(const Theta& theta, const Bits&, Action a,
                                          ObsSupport& out) const {
    out.clear();
    out.push_back({occupied(theta, a) ? kObsHit : kObsMiss, 1.0});
}

double BattleshipModel::transition_prob(const Theta& theta, const Bits& x, Action a,
                                        const Bits& x2) const {
    return next_x(theta, x, a) == x2 ? 1.0 : 0.0;
}

double BattleshipModel::observation_prob(const Theta& theta, const Bits&, Action a,
                                         Obs o) const {
    return o == (occupied(theta, a) ? kObsHit : kObsMiss) ? 1.0 : 0.0;
}

Bits BattleshipModel::sample_transition(const Theta& theta, const Bits& x, Action a,
                                        Rng&) const {
    return next_x(theta, x, a);
}

Obs BattleshipModel::sample_observation(const Theta& theta, const Bits&, Action a,
                                        Rng&) const {
    return occupied(theta, a) ? kObsHit : kObsMiss;
}

namespace {

class BattleshipContext final : public InternalRewardContext {
public:
    BattleshipContext(const BattleshipModel& m, const Belief& belief, double beta)
        : m_(m), beta_(beta) {
        marginals_.assign(static_cast<std::size_t>(m.grid_size() * m.grid_size()), 0.0);
        double total = 0.0;
        for (std::size_t i = 0; i < belief.size(); ++i) {
            const double w = belief.weight(i);
            if (w <= 0.0) continue;
            total += w;
            const Theta& theta = belief.value(i);
            for (std::size_t cell = 0; cell < marginals_.size(); ++cell)
                if (get_bit(theta, cell)) marginals_[cell] += w;
        }
        if (total > 0.0)
            for (double& p : marginals_) p /= total;
    }

    double internal_reward(const Bits& x, Action a) const override {
        const double p = marginals_[static_cast<std::size_t>(a)];
        // A deterministic hit/miss read moves the L1 mass by 4 p (1-p).
        double r = -1.0 + beta_ * 4.0 * p * (1.0 - p);
        if (m_.hit_count(x) + 1 == m_.total_ship_cells())
            r += p * static_cast<double>(m_.grid_size() * m_.grid_size());
        return r;
    }

private:
    const BattleshipModel& m_;
    double beta_;
    std::vector<double> marginals_;
};

}  // namespace

std::unique_ptr<InternalRewardContext> BattleshipModel::internal_reward_context(
    const Belief& belief, double beta) const {
    return std::make_unique<BattleshipContext>(*this, belief, beta);
}

std::string BattleshipModel::format_x(const Bits& x) const {
    return "fired" + std::to_string(popcount(Bits(x.begin(), x.begin() + words_))) + "/hit" +
           std::to_string(hit_count(x));
}

std::string BattleshipModel::format_action(Action a) const {
    return "fire(" + std::to_string(a % n_) + "," + std::to_string(a / n_) + ")";
}

std::string BattleshipModel::format_obs(Obs o) const {
    if (o == kNullObs) return "null";
    return o == kObsHit ? "hit" : "miss";
}

std::shared_ptr<BattleshipModel> make_battleship(int n, int k) {
    return std::make_shared<BattleshipModel>(n, k);
}

}  // namespace pomdplite

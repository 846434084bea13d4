#include "pomdplite/tabular.hpp"

#include <algorithm>
#include <cmath>

namespace pomdplite {
namespace {

constexpr double kRowTol = 1e-9;

double row_sum(const std::vector<TabularModel::Row>& rows) {
    double t = 0.0;
    for (const auto& r : rows) t += r.p;
    return t;
}

}  // namespace

TabularModel::TabularModel(Data data) : data_(std::move(data)) {
    const std::size_t S = data_.states.size();
    const std::size_t N = data_.params.size();
    const std::size_t A = data_.actions.size();
    if (N == 0) throw ArgumentError(data_.model_name + ": hidden parameter set must be nonempty");
    if (S == 0) throw ArgumentError(data_.model_name + ": state set must be nonempty");
    if (A == 0) throw ArgumentError(data_.model_name + ": action set must be nonempty");
    if (!(data_.gamma > 0.0 && data_.gamma <= 1.0))
        throw ArgumentError(data_.model_name + ": discount must be in (0, 1]");
    if (data_.prior.size() != N) throw ArgumentError(data_.model_name + ": prior size mismatch");
    if (data_.terminal.size() != S) data_.terminal.resize(S, false);
    if (data_.initial_state < 0 || data_.initial_state >= static_cast<int>(S))
        throw ArgumentError(data_.model_name + ": initial state out of range");

    const std::size_t cells = N * S * A;
    data_.transition.resize(cells);
    data_.observation.resize(cells);
    data_.rewards.resize(cells, 0.0);
    if (!data_.phi.empty() && data_.phi.size() != cells)
        throw ArgumentError(data_.model_name + ": phi table size mismatch");

    double prior_sum = 0.0;
    for (double p : data_.prior) {
        if (p < 0.0) throw ArgumentError(data_.model_name + ": negative prior weight");
        prior_sum += p;
    }
    if (std::abs(prior_sum - 1.0) > kRowTol)
        throw ArgumentError(data_.model_name + ": prior does not sum to 1");

    for (std::size_t t = 0; t < N; ++t) {
        for (std::size_t x = 0; x < S; ++x) {
            if (data_.terminal[x]) continue;
            for (std::size_t a = 0; a < A; ++a) {
                const std::size_t c = (t * S + x) * A + a;
                const auto& rows = data_.transition[c];
                if (rows.empty())
                    throw ArgumentError(data_.model_name + ": no transition rows for (" +
                                        data_.params[t] + ", " + data_.states[x] + ", " +
                                        data_.actions[a] + ")");
                if (std::abs(row_sum(rows) - 1.0) > kRowTol)
                    throw ArgumentError(data_.model_name + ": transition rows for (" +
                                        data_.params[t] + ", " + data_.states[x] + ", " +
                                        data_.actions[a] + ") do not sum to 1");
                if (!std::isfinite(data_.rewards[c]))
                    throw ArgumentError(data_.model_name + ": non-finite reward");
            }
        }
    }

    // Observation rows are indexed by the successor state, so every nonempty
    // row must normalize regardless of terminal flags.
    for (std::size_t t = 0; t < N; ++t)
        for (std::size_t x2 = 0; x2 < S; ++x2)
            for (std::size_t a = 0; a < A; ++a) {
                const auto& rows = data_.observation[(t * S + x2) * A + a];
                if (!rows.empty() && std::abs(row_sum(rows) - 1.0) > kRowTol)
                    throw ArgumentError(data_.model_name + ": observation rows for (" +
                                        data_.params[t] + ", " + data_.states[x2] + ", " +
                                        data_.actions[a] + ") do not sum to 1");
            }

    double rmin = 0.0, rmax = 0.0;
    for (double r : data_.rewards) {
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    exploration_ = std::max(rmax - rmin, 1.0);
}

void TabularModel::legal_actions(const AugState& s, ActionList& out) const {
    out.clear();
    if (data_.terminal[s.x[0]]) return;
    for (int a = 0; a < static_cast<int>(data_.actions.size()); ++a) out.push_back(a);
}

double TabularModel::reward(const Theta& theta, const Bits& x, Action a) const {
    return data_.rewards[cell(theta, x, a)];
}

Theta TabularModel::dynamics(const Theta& theta, const Bits& x, Action a) const {
    if (data_.phi.empty()) return theta;
    return bits_of(static_cast<std::uint64_t>(data_.phi[cell(theta, x, a)]));
}

void TabularModel::transition_support(const Theta& theta, const Bits& x, Action a,
                                      StateSupport& out) const {
    out.clear();
    for (const auto& r : data_.transition[cell(theta, x, a)])
        out.push_back({bits_of(static_cast<std::uint64_t>(r.next)), r.p});
}

void TabularModel::observation_support(const Theta& theta, const Bits& x2, Action a,
                                       ObsSupport& out) const {
    out.clear();
    // The observation row is indexed by the successor state x2.
    const auto& rows = data_.observation[cell(theta, x2, a)];
    if (rows.empty()) {
        out.push_back({kNullObs, 1.0});
        return;
    }
    for (const auto& r : rows) out.push_back({static_cast<Obs>(r.next), r.p});
}

double TabularModel::transition_prob(const Theta& theta, const Bits& x, Action a,
                                     const Bits& x2) const {
    for (const auto& r : data_.transition[cell(theta, x, a)])
        if (static_cast<std::uint64_t>(r.next) == x2[0]) return r.p;
    return 0.0;
}

double TabularModel::observation_prob(const Theta& theta, const Bits& x2, Action a,
                                      Obs o) const {
    const auto& rows = data_.observation[cell(theta, x2, a)];
    if (rows.empty()) return o == kNullObs ? 1.0 : 0.0;
    for (const auto& r : rows)
        if (r.next == o) return r.p;
    return 0.0;
}

namespace {
std::optional<int> find_name(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<int>(it - names.begin());
}
}  // namespace

std::optional<int> TabularModel::state_index(const std::string& name) const {
    return find_name(data_.states, name);
}
std::optional<int> TabularModel::param_index(const std::string& name) const {
    return find_name(data_.params, name);
}
std::optional<int> TabularModel::action_index(const std::string& name) const {
    return find_name(data_.actions, name);
}
std::optional<Obs> TabularModel::obs_index(const std::string& name) const {
    if (name == "null") return kNullObs;
    auto i = find_name(data_.observations, name);
    if (!i) return std::nullopt;
    return static_cast<Obs>(*i);
}

}  // namespace pomdplite

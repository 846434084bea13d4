#include <deque>
#include <iomanip>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "pomdplite/plite.hpp"

namespace pomdplite {
namespace {

void write_number(std::ostream& os, double v) {
    os << std::setprecision(17) << v;
}

void write_data(std::ostream& os, const TabularModel::Data& d) {
    os << "plite 1\n";
    os << "discount: ";
    write_number(os, d.gamma);
    os << "\n";
    os << "params:";
    for (const auto& p : d.params) os << " " << p;
    os << "\n";
    os << "states:";
    for (const auto& s : d.states) os << " " << s;
    os << "\n";
    os << "actions:";
    for (const auto& a : d.actions) os << " " << a;
    os << "\n";
    os << "observations:";
    for (const auto& o : d.observations) os << " " << o;
    os << "\n";
    os << "initial: " << d.states[d.initial_state] << "\n";
    os << "terminal:";
    for (std::size_t x = 0; x < d.states.size(); ++x)
        if (d.terminal[x]) os << " " << d.states[x];
    os << "\n";
    os << "prior:";
    for (std::size_t t = 0; t < d.params.size(); ++t) {
        os << " " << d.params[t] << " ";
        write_number(os, d.prior[t]);
    }
    os << "\n";

    const std::size_t S = d.states.size(), A = d.actions.size(), N = d.params.size();
    for (std::size_t t = 0; t < N; ++t)
        for (std::size_t x = 0; x < S; ++x)
            for (std::size_t a = 0; a < A; ++a) {
                const std::size_t c = (t * S + x) * A + a;
                for (const auto& row : d.transition[c]) {
                    if (row.p == 0.0) continue;
                    os << "T: " << d.params[t] << " " << d.states[x] << " " << d.actions[a]
                       << " " << d.states[row.next] << " ";
                    write_number(os, row.p);
                    os << "\n";
                }
            }
    for (std::size_t t = 0; t < N; ++t)
        for (std::size_t x2 = 0; x2 < S; ++x2)
            for (std::size_t a = 0; a < A; ++a) {
                const std::size_t c = (t * S + x2) * A + a;
                const auto& rows = d.observation[c];
                // {null: 1} is the parser default; omit it.
                if (rows.size() == 1 && rows[0].next == kNullObs && rows[0].p == 1.0) continue;
                for (const auto& row : rows) {
                    if (row.p == 0.0) continue;
                    os << "Z: " << d.params[t] << " " << d.states[x2] << " " << d.actions[a]
                       << " " << (row.next == kNullObs ? "null" : d.observations[row.next])
                       << " ";
                    write_number(os, row.p);
                    os << "\n";
                }
            }
    for (std::size_t t = 0; t < N; ++t)
        for (std::size_t x = 0; x < S; ++x)
            for (std::size_t a = 0; a < A; ++a) {
                const std::size_t c = (t * S + x) * A + a;
                if (d.rewards[c] == 0.0) continue;
                os << "R: " << d.params[t] << " " << d.states[x] << " " << d.actions[a] << " ";
                write_number(os, d.rewards[c]);
                os << "\n";
            }
}

std::string sanitize(std::string s) {
    for (char& c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) c = '_';
    return s.empty() ? std::string("_") : s;
}

TabularModel::Data extract_data(const Model& model, std::size_t state_cap) {
    const std::int64_t n = model.num_hidden_values();
    if (n < 1)
        throw UnsupportedError(model.name() +
                               ": cannot serialize a model with a non-enumerable hidden space");

    TabularModel::Data d;
    d.model_name = model.name();
    d.gamma = model.discount();
    model.prior_weights(d.prior);
    for (std::int64_t t = 0; t < n; ++t) d.params.push_back("th" + std::to_string(t));

    // Hidden values must be identifiable for phi extraction.
    std::unordered_map<Theta, std::int64_t, BitsHash> theta_index;
    std::vector<Theta> theta_values;
    for (std::int64_t t = 0; t < n; ++t) {
        theta_values.push_back(model.hidden_value(t));
        theta_index[theta_values.back()] = t;
    }

    // Enumerate observable states reachable under any hypothesis.
    std::vector<Bits> states;
    std::unordered_map<Bits, int, BitsHash> state_index;
    auto intern_state = [&](const Bits& x) {
        auto it = state_index.find(x);
        if (it != state_index.end()) return it->second;
        if (states.size() >= state_cap)
            throw UnsupportedError(model.name() + ": state space exceeds the serializer cap");
        const int idx = static_cast<int>(states.size());
        state_index.emplace(x, idx);
        states.push_back(x);
        return idx;
    };
    std::deque<int> frontier;
    intern_state(model.initial_x());
    frontier.push_back(0);
    const int A = model.num_actions();
    ActionList acts;
    StateSupport sup;
    std::unordered_set<int> seen_frontier{0};
    while (!frontier.empty()) {
        const int xi = frontier.front();
        frontier.pop_front();
        const Bits x = states[xi];
        if (model.is_terminal(x)) continue;
        model.legal_actions(AugState{x, kNullObs}, acts);
        if (static_cast<int>(acts.size()) != A)
            throw UnsupportedError(model.name() +
                                   ": state-dependent action legality cannot be serialized");
        for (std::int64_t t = 0; t < n; ++t)
            for (Action a = 0; a < A; ++a) {
                model.transition_support(theta_values[t], x, a, sup);
                for (const auto& e : sup) {
                    const int idx = intern_state(e.value);
                    if (seen_frontier.insert(idx).second) frontier.push_back(idx);
                }
            }
    }

    for (const Bits& x : states) {
        d.states.push_back(sanitize(model.format_x(x)));
        d.terminal.push_back(model.is_terminal(x));
    }
    // Disambiguate duplicate display names.
    std::unordered_map<std::string, int> name_count;
    for (auto& s : d.states) {
        const int c = name_count[s]++;
        if (c > 0) s += "_" + std::to_string(c);
    }
    for (Action a = 0; a < A; ++a) d.actions.push_back(sanitize(model.format_action(a)));
    d.initial_state = 0;

    // Observations are collected from the supports.
    std::unordered_map<Obs, int> obs_index;
    auto intern_obs = [&](Obs o) {
        auto it = obs_index.find(o);
        if (it != obs_index.end()) return it->second;
        const int idx = static_cast<int>(d.observations.size());
        obs_index.emplace(o, idx);
        d.observations.push_back(sanitize(model.format_obs(o)));
        return idx;
    };

    const std::size_t S = states.size();
    d.transition.resize(n * S * A);
    d.observation.resize(n * S * A);
    d.rewards.resize(n * S * A, 0.0);
    const bool needs_phi = !model.has_static_hidden();
    if (needs_phi) d.phi.resize(n * S * A, 0);

    ObsSupport osup;
    for (std::int64_t t = 0; t < n; ++t)
        for (std::size_t xi = 0; xi < S; ++xi) {
            for (Action a = 0; a < A; ++a) {
                const std::size_t c = (static_cast<std::size_t>(t) * S + xi) * A + a;
                // Observation rows live on the successor-state index.
                model.observation_support(theta_values[t], states[xi], a, osup);
                if (!(osup.size() == 1 && osup[0].value == kNullObs)) {
                    for (const auto& oe : osup)
                        d.observation[c].push_back(
                            {oe.value == kNullObs ? kNullObs : intern_obs(oe.value), oe.prob});
                }
                if (model.is_terminal(states[xi])) continue;
                model.transition_support(theta_values[t], states[xi], a, sup);
                for (const auto& e : sup)
                    d.transition[c].push_back({state_index.at(e.value), e.prob});
                d.rewards[c] = model.reward(theta_values[t], states[xi], a);
                if (needs_phi) {
                    const Theta t2 = model.dynamics(theta_values[t], states[xi], a);
                    auto it = theta_index.find(t2);
                    if (it == theta_index.end())
                        throw UnsupportedError(model.name() +
                                               ": dynamics leave the enumerated hidden space");
                    d.phi[c] = static_cast<std::int32_t>(it->second);
                }
            }
        }
    return d;
}

}  // namespace

std::string serialize_model(const Model& model, std::size_t state_cap) {
    std::ostringstream os;
    if (const auto* tab = dynamic_cast<const TabularModel*>(&model)) {
        write_data(os, tab->data());
    } else {
        write_data(os, extract_data(model, state_cap));
    }
    return os.str();
}

}  // namespace pomdplite

#include "pomdplite/model.hpp"

#include <sstream>

namespace pomdplite {

Theta Model::sample_hidden_prior(Rng& rng) const {
    const std::int64_t n = num_hidden_values();
    if (n < 1)
        throw UnsupportedError(name() + ": sample_hidden_prior needs an enumerable prior or an override");
    std::vector<double> w;
    prior_weights(w);
    double u = rng.uniform01();
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        acc += w[i];
        if (u < acc) return hidden_value(static_cast<std::int64_t>(i));
    }
    return hidden_value(n - 1);
}

double Model::transition_prob(const Theta& theta, const Bits& x, Action a,
                              const Bits& x2) const {
    StateSupport sup;
    transition_support(theta, x, a, sup);
    for (const auto& e : sup)
        if (e.value == x2) return e.prob;
    return 0.0;
}

double Model::observation_prob(const Theta& theta, const Bits& x2, Action a, Obs o) const {
    ObsSupport sup;
    observation_support(theta, x2, a, sup);
    for (const auto& e : sup)
        if (e.value == o) return e.prob;
    return 0.0;
}

Bits Model::sample_transition(const Theta& theta, const Bits& x, Action a, Rng& rng) const {
    StateSupport sup;
    transition_support(theta, x, a, sup);
    double u = rng.uniform01();
    double acc = 0.0;
    for (const auto& e : sup) {
        acc += e.prob;
        if (u < acc) return e.value;
    }
    return sup.back().value;
}

Obs Model::sample_observation(const Theta& theta, const Bits& x2, Action a, Rng& rng) const {
    ObsSupport sup;
    observation_support(theta, x2, a, sup);
    double u = rng.uniform01();
    double acc = 0.0;
    for (const auto& e : sup) {
        acc += e.prob;
        if (u < acc) return e.value;
    }
    return sup.back().value;
}

std::string Model::format_x(const Bits& x) const {
    std::ostringstream os;
    os << "x[";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ":" : "") << x[i];
    os << "]";
    return os.str();
}

std::string Model::format_action(Action a) const { return "a" + std::to_string(a); }

std::string Model::format_obs(Obs o) const {
    return o == kNullObs ? "null" : "o" + std::to_string(o);
}

std::string format_aug_state(const Model& m, const AugState& s) {
    return "(" + m.format_x(s.x) + "," + m.format_obs(s.obs) + ")";
}

}  // namespace pomdplite

#include "pomdplite/domains/tiger.hpp"

namespace pomdplite {

std::shared_ptr<TabularModel> make_tiger(double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw ArgumentError("make_tiger: gamma must be in (0, 1]");

    TabularModel::Data d;
    d.model_name = "tiger";
    d.gamma = gamma;
    d.states = {"playing", "END"};
    d.params = {"L", "R"};
    d.actions = {"OL", "OR", "LS"};
    d.observations = {"TL", "TR"};
    d.prior = {0.5, 0.5};
    d.initial_state = 0;
    d.terminal = {false, true};

    const std::size_t S = 2, A = 3;
    d.transition.resize(2 * S * A);
    d.observation.resize(2 * S * A);
    d.rewards.resize(2 * S * A, 0.0);
    auto cell = [&](std::int64_t t, int x, Action a) {
        return (static_cast<std::size_t>(t) * S + static_cast<std::size_t>(x)) * A +
               static_cast<std::size_t>(a);
    };
    const int playing = 0, end = 1;

    for (std::int64_t t : {tiger::kThetaLeft, tiger::kThetaRight}) {
        d.transition[cell(t, playing, tiger::kListen)] = {{playing, 1.0}};
        d.transition[cell(t, playing, tiger::kOpenLeft)] = {{end, 1.0}};
        d.transition[cell(t, playing, tiger::kOpenRight)] = {{end, 1.0}};

        const double acc = 0.85;
        const bool left = (t == tiger::kThetaLeft);
        d.observation[cell(t, playing, tiger::kListen)] = {
            {tiger::kObsTigerLeft, left ? acc : 1.0 - acc},
            {tiger::kObsTigerRight, left ? 1.0 - acc : acc}};

        d.rewards[cell(t, playing, tiger::kListen)] = -1.0;
        d.rewards[cell(t, playing, tiger::kOpenLeft)] = left ? -100.0 : 10.0;
        d.rewards[cell(t, playing, tiger::kOpenRight)] = left ? 10.0 : -100.0;
    }

    return std::make_shared<TabularModel>(std::move(d));
}

}  // namespace pomdplite

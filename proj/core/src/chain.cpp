#include "pomdplite/domains/chain.hpp"

namespace pomdplite {

std::shared_ptr<TabularModel> make_deterministic_chain(int variants, int length,
                                                       double gamma) {
    if (variants < 1) throw ArgumentError("make_deterministic_chain: variants must be >= 1");
    if (length < 2) throw ArgumentError("make_deterministic_chain: length must be >= 2");

    TabularModel::Data d;
    d.model_name = "chain";
    d.gamma = gamma;
    for (int i = 0; i < length; ++i) d.states.push_back("c" + std::to_string(i));
    for (int t = 0; t < variants; ++t) d.params.push_back("t" + std::to_string(t));
    d.actions = {"advance", "jump"};
    d.prior.assign(static_cast<std::size_t>(variants), 1.0 / variants);
    d.initial_state = 0;
    d.terminal.assign(static_cast<std::size_t>(length), false);

    const std::size_t S = static_cast<std::size_t>(length), A = 2;
    d.transition.resize(static_cast<std::size_t>(variants) * S * A);
    d.rewards.resize(static_cast<std::size_t>(variants) * S * A, 0.0);
    d.observation.resize(static_cast<std::size_t>(variants) * S * A);

    for (int t = 0; t < variants; ++t) {
        for (int x = 0; x < length; ++x) {
            const std::size_t base = (static_cast<std::size_t>(t) * S + x) * A;
            d.transition[base + 0] = {{(x + 1) % length, 1.0}};
            d.transition[base + 1] = {{(x + 1 + t) % length, 1.0}};
            if (x == length - 1) d.rewards[base + 0] = 1.0;
        }
    }

    return std::make_shared<TabularModel>(std::move(d));
}

}  // namespace pomdplite

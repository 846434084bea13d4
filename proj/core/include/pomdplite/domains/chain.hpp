#pragma once

#include "pomdplite/tabular.hpp"

namespace pomdplite {

/// Small chain MDP family with a discrete uniform prior over `variants`
/// fully deterministic transition tables. "advance" moves one cell forward
/// under every hypothesis; "jump" lands theta-dependently, so one jump from
/// any cell pins the hypothesis down. Advancing from the last cell pays 1.
/// Hidden values are static; no observations (the next state itself is the
/// evidence).
std::shared_ptr<TabularModel> make_deterministic_chain(int variants, int length,
                                                       double gamma = 0.95);

}  // namespace pomdplite

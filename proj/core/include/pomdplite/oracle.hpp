#pragma once

#include "pomdplite/belief_ops.hpp"

namespace pomdplite {

struct OracleResult {
    double value = 0.0;
    Action action = -1;
    std::size_t nodes = 0;
};

/// Exact finite-horizon expectimax over the belief tree, with the belief
/// updated at every branch. Only feasible on tiny models; throws BudgetError
/// past `node_cap` expansions.
OracleResult bayes_optimal_oracle(const Model& model, const Belief& belief,
                                  const AugState& s, int horizon,
                                  std::size_t node_cap = 5'000'000);

}  // namespace pomdplite

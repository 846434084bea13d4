#pragma once

#include "pomdplite/tabular.hpp"

namespace pomdplite {

namespace tiger {
inline constexpr Action kOpenLeft = 0;
inline constexpr Action kOpenRight = 1;
inline constexpr Action kListen = 2;
inline constexpr Obs kObsTigerLeft = 0;
inline constexpr Obs kObsTigerRight = 1;
inline constexpr std::int64_t kThetaLeft = 0;
inline constexpr std::int64_t kThetaRight = 1;
}  // namespace tiger

/// One-shot Tiger: the tiger sits behind the left or right door (uniform
/// prior) and never moves. Listening costs -1 and reports the side with
/// accuracy 0.85; opening ends the game with +10 past the free door or -100
/// into the tiger.
std::shared_ptr<TabularModel> make_tiger(double gamma = 0.95);

}  // namespace pomdplite

#ifndef LPWAN_STRATEGY_HPP_
#define LPWAN_STRATEGY_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lpwan/config.hpp"
#include "lpwan/device.hpp"
#include "lpwan/ucb.hpp"

namespace lpwan {

/// First-stage learner plus the retransmission mechanism of one device.
/// Only the learners the strategy actually uses are allocated.
struct StrategyState {
    Strategy kind = Strategy::NoLearning;
    std::uint32_t n_channels = 0;
    std::optional<UcbLearner> first_stage;
    std::optional<UcbLearner> retrans_single;        // UCB / Delayed UCB
    std::vector<UcbLearner> retrans_per_channel;     // K UCB
    std::uint64_t delay_threshold = 0;               // Delayed UCB
    bool freeze_only_ucb = false;  // OnlyUcb variant: reuse first channel

    static StrategyState make(Strategy kind, std::uint32_t n_channels,
                              double alpha, std::uint64_t delay_threshold,
                              bool freeze_only_ucb = false);
};

/// Channel choice for a device that is ReadyToTransmit at `slot`.
std::uint32_t strategy_select(StrategyState& s, const DeviceState& dev,
                              std::uint64_t slot, std::mt19937_64& rng);

/// Feed the attempt outcome back into whichever learner strategy_select
/// consulted (possibly none).
void strategy_observe(StrategyState& s, const DeviceState& dev,
                      std::uint32_t channel, std::uint64_t slot,
                      double reward);

}  // namespace lpwan

#endif  // LPWAN_STRATEGY_HPP_

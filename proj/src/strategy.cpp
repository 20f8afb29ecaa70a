#include "lpwan/strategy.hpp"

#include "lpwan/rng.hpp"

namespace lpwan {

StrategyState StrategyState::make(Strategy kind, std::uint32_t n_channels,
                                  double alpha,
                                  std::uint64_t delay_threshold,
                                  bool freeze_only_ucb) {
    StrategyState s;
    s.kind = kind;
    s.n_channels = n_channels;
    s.delay_threshold = delay_threshold;
    s.freeze_only_ucb = freeze_only_ucb;
    if (kind != Strategy::NoLearning)
        s.first_stage.emplace(n_channels, alpha);
    if (kind == Strategy::UcbRetrans || kind == Strategy::DelayedUcbRetrans)
        s.retrans_single.emplace(n_channels, alpha);
    if (kind == Strategy::KUcbRetrans)
        s.retrans_per_channel.assign(n_channels,
                                     UcbLearner(n_channels, alpha));
    return s;
}

std::uint32_t strategy_select(StrategyState& s, const DeviceState& dev,
                              std::uint64_t slot, std::mt19937_64& rng) {
    const bool retransmission = dev.attempt_index >= 1;
    switch (s.kind) {
        case Strategy::NoLearning:
            return uniform_below(rng, s.n_channels);
        case Strategy::OnlyUcb:
            if (retransmission && s.freeze_only_ucb) {
                if (!dev.first_channel)
                    throw std::logic_error(
                        "OnlyUcb(freeze): first_channel unset");
                return *dev.first_channel;
            }
            return learner_select(*s.first_stage, rng);
        case Strategy::RandomRetrans:
            if (retransmission) return uniform_below(rng, s.n_channels);
            return learner_select(*s.first_stage, rng);
        case Strategy::UcbRetrans:
            if (retransmission) return learner_select(*s.retrans_single, rng);
            return learner_select(*s.first_stage, rng);
        case Strategy::KUcbRetrans:
            if (retransmission) {
                if (!dev.first_channel)
                    throw std::logic_error("KUcbRetrans: first_channel unset");
                return learner_select(s.retrans_per_channel[*dev.first_channel],
                                      rng);
            }
            return learner_select(*s.first_stage, rng);
        case Strategy::DelayedUcbRetrans:
            if (retransmission) {
                if (slot <= s.delay_threshold)
                    return uniform_below(rng, s.n_channels);
                return learner_select(*s.retrans_single, rng);
            }
            return learner_select(*s.first_stage, rng);
    }
    throw std::logic_error("unreachable strategy kind");
}

void strategy_observe(StrategyState& s, const DeviceState& dev,
                      std::uint32_t channel, std::uint64_t slot,
                      double reward) {
    const bool retransmission = dev.attempt_index >= 1;
    switch (s.kind) {
        case Strategy::NoLearning:
            return;
        case Strategy::OnlyUcb:
            learner_update(*s.first_stage, channel, reward);
            return;
        case Strategy::RandomRetrans:
            if (!retransmission)
                learner_update(*s.first_stage, channel, reward);
            return;
        case Strategy::UcbRetrans:
            if (retransmission)
                learner_update(*s.retrans_single, channel, reward);
            else
                learner_update(*s.first_stage, channel, reward);
            return;
        case Strategy::KUcbRetrans:
            if (retransmission) {
                if (!dev.first_channel)
                    throw std::logic_error("KUcbRetrans: first_channel unset");
                learner_update(s.retrans_per_channel[*dev.first_channel],
                               channel, reward);
            } else {
                learner_update(*s.first_stage, channel, reward);
            }
            return;
        case Strategy::DelayedUcbRetrans:
            if (retransmission) {
                if (slot > s.delay_threshold)
                    learner_update(*s.retrans_single, channel, reward);
            } else {
                learner_update(*s.first_stage, channel, reward);
            }
            return;
    }
}

}  // namespace lpwan

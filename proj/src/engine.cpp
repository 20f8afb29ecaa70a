#include "lpwan/engine.hpp"

#include <cmath>

#include "lpwan/rng.hpp"

namespace lpwan {
namespace {

// Slots until the next packet arrival, geometric with success probability p.
// Equivalent to one Bernoulli(p) draw per idle slot.
std::uint64_t arrival_gap(std::mt19937_64& rng, double p,
                          std::uint64_t horizon) {
    if (p >= 1.0) return 0;
    const double u = u01(rng);
    const double g = std::floor(std::log1p(-u) / std::log1p(-p));
    if (!(g < static_cast<double>(horizon) + 1.0)) return horizon + 1;
    return static_cast<std::uint64_t>(g);
}

}  // namespace

World::World(const ScenarioConfig& cfg, std::uint64_t rep_index,
             EngineOptions opts)
    : config(cfg),
      devices(cfg.n_devices),
      background_rng(make_engine(cfg.master_seed, rep_index, 0)),
      next_arrival(cfg.n_devices),
      options(opts),
      busy(cfg.n_channels, 0),
      channel_load(cfg.n_channels, 0) {
    strategies.reserve(cfg.n_devices);
    device_rng.reserve(cfg.n_devices);
    for (std::uint32_t i = 0; i < cfg.n_devices; ++i) {
        strategies.push_back(StrategyState::make(
            cfg.strategy, cfg.n_channels, cfg.alpha, cfg.delay_threshold,
            cfg.only_ucb_freeze));
        device_rng.push_back(make_engine(cfg.master_seed, rep_index, 1 + i));
        next_arrival[i] = arrival_gap(device_rng[i], cfg.tx_prob, cfg.horizon);
    }
    if (opts.track_series) {
        result.attempts.assign(cfg.horizon, 0);
        result.successes.assign(cfg.horizon, 0);
        result.drops.assign(cfg.horizon, 0);
    }
}

std::uint32_t draw_backoff(std::mt19937_64& rng, std::uint32_t m) {
    return uniform_below(rng, m);
}

std::vector<std::uint8_t> resolve_slot(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& transmissions,
    const std::vector<std::uint8_t>& busy, std::uint32_t n_channels) {
    std::vector<std::uint32_t> load(n_channels, 0);
    for (const auto& [dev, ch] : transmissions) ++load[ch];
    std::vector<std::uint8_t> ok(transmissions.size());
    for (std::size_t i = 0; i < transmissions.size(); ++i) {
        const std::uint32_t ch = transmissions[i].second;
        ok[i] = !busy[ch] && load[ch] == 1;
    }
    return ok;
}

void advance_slot(World& w) {
    const ScenarioConfig& cfg = w.config;
    ReplicationResult& res = w.result;
    w.transmissions.clear();

    for (std::uint32_t i = 0; i < cfg.n_devices; ++i) {
        DeviceState& d = w.devices[i];
        switch (d.phase) {
            case Phase::Idle:
                if (w.next_arrival[i] == w.slot) {
                    d.phase = Phase::ReadyToTransmit;
                    d.attempt_index = 0;
                    d.first_channel.reset();
                    d.current_channel.reset();
                    ++res.generated_packets;
                }
                break;
            case Phase::Backoff:
                if (d.backoff_remaining == 0)
                    d.phase = Phase::ReadyToTransmit;
                else
                    --d.backoff_remaining;
                break;
            case Phase::ReadyToTransmit:
                break;
        }
        if (d.phase == Phase::ReadyToTransmit) {
            const std::uint32_t ch =
                strategy_select(w.strategies[i], d, w.slot, w.device_rng[i]);
            d.current_channel = ch;
            w.transmissions.emplace_back(i, ch);
        }
    }

    for (std::uint32_t k = 0; k < cfg.n_channels; ++k)
        w.busy[k] = u01(w.background_rng) < cfg.occupancy[k];

    const std::vector<std::uint8_t> ok =
        resolve_slot(w.transmissions, w.busy, cfg.n_channels);

    for (std::size_t t = 0; t < w.transmissions.size(); ++t) {
        const auto [i, ch] = w.transmissions[t];
        DeviceState& d = w.devices[i];
        const bool success = ok[t];

        ++res.total_attempts;
        res.total_successes += success;
        if (w.options.track_series) {
            ++res.attempts[w.slot];
            res.successes[w.slot] += success;
        }
        if (d.attempt_index == 0) {
            ++res.first_attempt_count;
            res.first_attempt_collisions += !success;
        } else if (d.attempt_index == 1) {
            ++res.second_attempt_count;
            res.second_attempt_collisions += !success;
        }
        if (w.options.record_attempts)
            res.attempt_log.push_back(
                {w.slot, i, ch, d.attempt_index, success});

        strategy_observe(w.strategies[i], d, ch, w.slot, success ? 1.0 : 0.0);

        if (success) {
            ++res.delivered_packets;
            d.phase = Phase::Idle;
            d.attempt_index = 0;
            d.first_channel.reset();
            d.current_channel.reset();
            w.next_arrival[i] =
                w.slot + 1 + arrival_gap(w.device_rng[i], cfg.tx_prob,
                                         cfg.horizon);
        } else {
            if (d.attempt_index == 0) d.first_channel = ch;
            if (d.attempt_index + 1 < cfg.max_attempts) {
                ++d.attempt_index;
                d.phase = Phase::Backoff;
                d.backoff_remaining =
                    draw_backoff(w.device_rng[i], cfg.backoff_window);
            } else {
                ++res.dropped_packets;
                if (w.options.track_series) ++res.drops[w.slot];
                d.phase = Phase::Idle;
                d.attempt_index = 0;
                d.first_channel.reset();
                d.current_channel.reset();
                w.next_arrival[i] =
                    w.slot + 1 + arrival_gap(w.device_rng[i], cfg.tx_prob,
                                             cfg.horizon);
            }
        }
    }
    ++w.slot;
}

ReplicationResult run_replication(const ScenarioConfig& cfg,
                                  std::uint64_t rep_index,
                                  EngineOptions opts) {
    World w(cfg, rep_index, opts);
    for (std::uint64_t t = 0; t < cfg.horizon; ++t) advance_slot(w);
    for (const DeviceState& d : w.devices)
        w.result.in_flight_at_end += d.phase != Phase::Idle;
    return std::move(w.result);
}

}  // namespace lpwan

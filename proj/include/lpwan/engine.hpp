#ifndef LPWAN_ENGINE_HPP_
#define LPWAN_ENGINE_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lpwan/config.hpp"
#include "lpwan/device.hpp"
#include "lpwan/strategy.hpp"

namespace lpwan {

/// Raw tallies of one replication.
struct ReplicationResult {
    // per-slot series (empty when series tracking is off)
    std::vector<std::uint32_t> attempts;
    std::vector<std::uint32_t> successes;
    std::vector<std::uint32_t> drops;

    // collision-probability estimation counters
    std::uint64_t first_attempt_count = 0;
    std::uint64_t first_attempt_collisions = 0;
    std::uint64_t second_attempt_count = 0;
    std::uint64_t second_attempt_collisions = 0;

    // packet accounting
    std::uint64_t generated_packets = 0;
    std::uint64_t delivered_packets = 0;
    std::uint64_t dropped_packets = 0;
    std::uint64_t in_flight_at_end = 0;

    std::uint64_t total_attempts = 0;
    std::uint64_t total_successes = 0;

    std::vector<AttemptRecord> attempt_log;  // filled only when requested
};

struct EngineOptions {
    bool track_series = true;   // keep per-slot attempt/success/drop vectors
    bool record_attempts = false;
};

/// Full simulation state of one replication.
struct World {
    ScenarioConfig config;
    std::uint64_t slot = 0;
    std::vector<DeviceState> devices;
    std::vector<StrategyState> strategies;
    std::vector<std::mt19937_64> device_rng;
    std::mt19937_64 background_rng;
    std::vector<std::uint64_t> next_arrival;  // earliest packet slot per Idle device
    ReplicationResult result;
    EngineOptions options;

    // scratch, reused across slots
    std::vector<std::pair<std::uint32_t, std::uint32_t>> transmissions;
    std::vector<std::uint8_t> busy;
    std::vector<std::uint32_t> channel_load;

    World(const ScenarioConfig& cfg, std::uint64_t rep_index,
          EngineOptions opts = {});
};

/// Uniform back-off delay in {0, ..., m-1}.
std::uint32_t draw_backoff(std::mt19937_64& rng, std::uint32_t m);

/// Success flags for a list of (device, channel) transmissions against the
/// sampled background busy vector: success iff the channel is free and used
/// by no other transmission.
std::vector<std::uint8_t> resolve_slot(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& transmissions,
    const std::vector<std::uint8_t>& busy, std::uint32_t n_channels);

/// One slot of the network: arrivals, back-off countdown, channel selection,
/// collision resolution, learner feedback and state transitions.
void advance_slot(World& w);

/// Runs advance_slot for slot = 0...T-1 from an all-Idle world. Deterministic
/// in (cfg.master_seed, rep_index).
ReplicationResult run_replication(const ScenarioConfig& cfg,
                                  std::uint64_t rep_index,
                                  EngineOptions opts = {});

}  // namespace lpwan

#endif  // LPWAN_ENGINE_HPP_

#ifndef LPWAN_DEVICE_HPP_
#define LPWAN_DEVICE_HPP_

#include <cstdint>
#include <optional>

namespace lpwan {

enum class Phase { Idle, Backoff, ReadyToTransmit };

/// Markov-chain position of one dynamic device.
struct DeviceState {
    Phase phase = Phase::Idle;
    std::uint32_t backoff_remaining = 0;   // valid in Backoff only
    std::uint32_t attempt_index = 0;       // 0 = first transmission
    std::optional<std::uint32_t> current_channel;  // most recent attempt
    std::optional<std::uint32_t> first_channel;    // first attempt of packet
};

/// One transmission event, recorded when attempt logging is enabled.
struct AttemptRecord {
    std::uint64_t slot;
    std::uint32_t device;
    std::uint32_t channel;
    std::uint32_t attempt_index;
    bool success;
};

}  // namespace lpwan

#endif  // LPWAN_DEVICE_HPP_

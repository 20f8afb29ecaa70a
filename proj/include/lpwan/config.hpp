#ifndef LPWAN_CONFIG_HPP_
#define LPWAN_CONFIG_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpwan {

/// Channel-selection strategy for a dynamic device.
enum class Strategy {
    NoLearning,         // "no UCB": uniform random for every attempt
    OnlyUcb,            // "Only UCB": one learner for all attempts
    RandomRetrans,      // "Random": UCB first, uniform random retransmission
    UcbRetrans,         // "UCB": UCB first, second learner for retransmissions
    KUcbRetrans,        // "K UCB": one retransmission learner per first channel
    DelayedUcbRetrans,  // "Delayed UCB": random until slot > delay, then UCB
};

const char* strategy_label(Strategy s);   // figure-legend name
const char* strategy_slug(Strategy s);    // file-name friendly
Strategy strategy_from_name(const std::string& name);  // accepts slug or label

struct ScenarioConfig {
    std::uint32_t n_devices = 0;       // N
    std::uint32_t n_channels = 0;      // K
    double tx_prob = 0.0;              // p, per-slot packet generation
    std::uint32_t max_attempts = 1;    // M
    std::uint32_t backoff_window = 1;  // m, delay uniform on {0,...,m-1}
    std::vector<double> occupancy;     // per-channel background busy prob
    Strategy strategy = Strategy::NoLearning;
    std::uint64_t delay_threshold = 20000;  // slots, DelayedUcbRetrans only
    std::uint64_t horizon = 0;              // T
    std::uint32_t replications = 10;
    std::uint64_t master_seed = 0;
    double alpha = 0.5;                 // UCB exploration coefficient
    bool only_ucb_freeze = false;       // OnlyUcb variant: keep the packet's
                                        // first channel for retransmissions
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Returns cfg unchanged iff every invariant holds; throws ConfigError
/// naming the first violated invariant otherwise.
const ScenarioConfig& validate_config(const ScenarioConfig& cfg);

}  // namespace lpwan

#endif  // LPWAN_CONFIG_HPP_

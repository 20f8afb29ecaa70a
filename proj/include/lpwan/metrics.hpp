#ifndef LPWAN_METRICS_HPP_
#define LPWAN_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lpwan/engine.hpp"

namespace lpwan {

/// Bucketed success-rate series of one replication. rate is the Ack fraction
/// among transmissions in the bucket; packet_rate is delivered / completed
/// packets. Buckets without data carry no value instead of 0/0.
struct RateSeries {
    std::uint64_t window = 0;
    std::vector<std::optional<double>> rate;
    std::vector<std::optional<double>> packet_rate;
};

/// Aggregate of one bucket across replications.
struct SeriesPoint {
    std::uint64_t slot_bucket = 0;   // bucket end slot (exclusive)
    double mean_rate = 0.0;
    double stderr_rate = 0.0;
    std::uint32_t n_reps = 0;
    double mean_packet_rate = 0.0;
};

/// Per-bucket success rate over consecutive windows of `window` slots.
RateSeries windowed_rate(const ReplicationResult& res, std::uint64_t window);

/// Running success rate from slot 0 up to each bucket end.
RateSeries cumulative_rate(const ReplicationResult& res, std::uint64_t window);

/// Per-bucket mean and standard error across replications; missing buckets
/// are excluded from both. Mismatched bucketing is an error.
std::vector<SeriesPoint> aggregate(const std::vector<RateSeries>& series);

/// (p_c_hat, p_c1_hat): collision fractions at attempt index 0 and 1.
/// Throws when either denominator is zero.
std::pair<double, double> collision_estimates(const ReplicationResult& res);

/// Mean and standard error, across replications, of the success rate over the
/// final `fraction` of the horizon.
std::pair<double, double> final_window_stats(
    const std::vector<ReplicationResult>& results, double fraction = 0.25);

}  // namespace lpwan

#endif  // LPWAN_METRICS_HPP_

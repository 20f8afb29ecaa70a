#ifndef LPWAN_RUNNER_HPP_
#define LPWAN_RUNNER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lpwan/config.hpp"
#include "lpwan/engine.hpp"
#include "lpwan/metrics.hpp"

namespace lpwan {

struct RunOptions {
    std::uint32_t workers = 1;
    bool track_series = true;
};

/// All replications of one scenario. Results are indexed by rep_index, so
/// the outcome does not depend on worker count or scheduling.
std::vector<ReplicationResult> run_replications(const ScenarioConfig& cfg,
                                                const RunOptions& opts);

struct StrategyRun {
    Strategy strategy;
    std::vector<SeriesPoint> windowed;
    std::vector<SeriesPoint> cumulative;
    double final_quartile_rate = 0.0;
    double final_quartile_stderr = 0.0;
};

/// Runs cfg once per strategy in `strategies` (overriding cfg.strategy) and
/// aggregates the series with the given smoothing window.
std::vector<StrategyRun> run_strategies(const ScenarioConfig& cfg,
                                        const std::vector<Strategy>& strategies,
                                        std::uint64_t window,
                                        const RunOptions& opts);

/// Writes one aggregated series CSV (schema:
/// slot_bucket, strategy, mean_rate, stderr, n_reps, mean_packet_rate).
/// With gnuplot = true, whitespace-separated columns and a '#' header.
void write_series_csv(const std::string& path, const std::string& label,
                      const std::vector<SeriesPoint>& points,
                      bool gnuplot = false);

/// Summary CSV: final-quartile mean rate per strategy.
void write_summary_csv(const std::string& path,
                       const std::vector<StrategyRun>& runs,
                       bool gnuplot = false);

struct ValidateRow {
    std::uint32_t n_devices = 0;
    double pc_sim = 0.0;
    double pc1_sim = 0.0;
    double pc1_approx = 0.0;
    double abs_err = 0.0;
};

/// Single-channel sweep point: pooled collision estimates over `cfg`
/// replications plus the closed-form prediction at the measured p_c.
ValidateRow run_validate_point(const ScenarioConfig& cfg,
                               const RunOptions& opts);

void write_validate_csv(const std::string& path,
                        const std::vector<ValidateRow>& rows,
                        bool gnuplot = false);

}  // namespace lpwan

#endif  // LPWAN_RUNNER_HPP_

#include "lpwan/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "lpwan/analytic.hpp"

namespace lpwan {

std::vector<ReplicationResult> run_replications(const ScenarioConfig& cfg,
                                                const RunOptions& opts) {
    validate_config(cfg);
    const std::uint32_t n_reps = cfg.replications;
    std::vector<ReplicationResult> results(n_reps);
    EngineOptions eopts;
    eopts.track_series = opts.track_series;

    const std::uint32_t workers =
        std::max<std::uint32_t>(1, std::min(opts.workers, n_reps));
    if (workers == 1) {
        for (std::uint32_t r = 0; r < n_reps; ++r)
            results[r] = run_replication(cfg, r, eopts);
        return results;
    }

    std::atomic<std::uint32_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint32_t r = next.fetch_add(1);
                if (r >= n_reps) return;
                results[r] = run_replication(cfg, r, eopts);
            }
        });
    }
    for (std::thread& t : pool) t.join();
    return results;
}

std::vector<StrategyRun> run_strategies(const ScenarioConfig& cfg,
                                        const std::vector<Strategy>& strategies,
                                        std::uint64_t window,
                                        const RunOptions& opts) {
    std::vector<StrategyRun> out;
    for (Strategy s : strategies) {
        ScenarioConfig c = cfg;
        c.strategy = s;
        const std::vector<ReplicationResult> reps = run_replications(c, opts);

        StrategyRun run;
        run.strategy = s;
        std::vector<RateSeries> windowed, cumulative;
        windowed.reserve(reps.size());
        cumulative.reserve(reps.size());
        for (const ReplicationResult& r : reps) {
            windowed.push_back(windowed_rate(r, window));
            cumulative.push_back(cumulative_rate(r, window));
        }
        run.windowed = aggregate(windowed);
        run.cumulative = aggregate(cumulative);
        const auto [mean, se] = final_window_stats(reps, 0.25);
        run.final_quartile_rate = mean;
        run.final_quartile_stderr = se;
        out.push_back(std::move(run));
    }
    return out;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write: " + path);
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

void write_series_csv(const std::string& path, const std::string& label,
                      const std::vector<SeriesPoint>& points, bool gnuplot) {
    std::ofstream out = open_out(path);
    const char sep = gnuplot ? ' ' : ',';
    if (gnuplot)
        out << "# slot_bucket strategy mean_rate stderr n_reps"
               " mean_packet_rate\n";
    else
        out << "slot_bucket,strategy,mean_rate,stderr,n_reps,"
               "mean_packet_rate\n";
    const std::string name =
        gnuplot ? "\"" + label + "\"" : label;
    for (const SeriesPoint& p : points) {
        out << p.slot_bucket << sep << name << sep << fmt(p.mean_rate) << sep
            << fmt(p.stderr_rate) << sep << p.n_reps << sep
            << fmt(p.mean_packet_rate) << '\n';
    }
}

void write_summary_csv(const std::string& path,
                       const std::vector<StrategyRun>& runs, bool gnuplot) {
    std::ofstream out = open_out(path);
    const char sep = gnuplot ? ' ' : ',';
    if (gnuplot)
        out << "# strategy final_quartile_rate stderr\n";
    else
        out << "strategy,final_quartile_rate,stderr\n";
    for (const StrategyRun& r : runs) {
        const std::string label = strategy_label(r.strategy);
        out << (gnuplot ? "\"" + label + "\"" : label) << sep
            << fmt(r.final_quartile_rate) << sep
            << fmt(r.final_quartile_stderr) << '\n';
    }
}

ValidateRow run_validate_point(const ScenarioConfig& cfg,
                               const RunOptions& opts) {
    RunOptions o = opts;
    o.track_series = false;
    const std::vector<ReplicationResult> reps = run_replications(cfg, o);

    ReplicationResult pooled;
    for (const ReplicationResult& r : reps) {
        pooled.first_attempt_count += r.first_attempt_count;
        pooled.first_attempt_collisions += r.first_attempt_collisions;
        pooled.second_attempt_count += r.second_attempt_count;
        pooled.second_attempt_collisions += r.second_attempt_collisions;
    }
    const auto [pc, pc1] = collision_estimates(pooled);

    ValidateRow row;
    row.n_devices = cfg.n_devices;
    row.pc_sim = pc;
    row.pc1_sim = pc1;
    row.pc1_approx = p_c1_approx(pc, cfg.n_devices, cfg.backoff_window);
    row.abs_err = std::abs(row.pc1_sim - row.pc1_approx);
    return row;
}

void write_validate_csv(const std::string& path,
                        const std::vector<ValidateRow>& rows, bool gnuplot) {
    std::ofstream out = open_out(path);
    const char sep = gnuplot ? ' ' : ',';
    if (gnuplot)
        out << "# N pc_sim pc1_sim pc1_approx abs_err\n";
    else
        out << "N,pc_sim,pc1_sim,pc1_approx,abs_err\n";
    for (const ValidateRow& r : rows) {
        out << r.n_devices << sep << fmt(r.pc_sim) << sep << fmt(r.pc1_sim)
            << sep << fmt(r.pc1_approx) << sep << fmt(r.abs_err) << '\n';
    }
}

}  // namespace lpwan

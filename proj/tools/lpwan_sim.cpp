// lpwan-sim: slotted-ALOHA LPWA network simulator with UCB-based channel
// selection, plus the closed-form collision-probability approximation.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lpwan/analytic.hpp"
#include "lpwan/config.hpp"
#include "lpwan/runner.hpp"
#include "lpwan/scenario_file.hpp"

namespace fs = std::filesystem;
using namespace lpwan;

namespace {

std::vector<Strategy> all_strategies() {
    return {Strategy::NoLearning,  Strategy::OnlyUcb,
            Strategy::RandomRetrans, Strategy::UcbRetrans,
            Strategy::KUcbRetrans, Strategy::DelayedUcbRetrans};
}

int cmd_simulate(const std::string& config_path, std::uint64_t seed,
                 bool seed_set, std::uint32_t reps, const std::string& out_dir,
                 const std::vector<std::string>& strategy_names,
                 std::uint64_t window, std::uint32_t workers,
                 std::uint64_t delay, bool delay_set, bool gnuplot) {
    ScenarioConfig cfg = parse_scenario(config_path);
    if (seed_set) cfg.master_seed = seed;
    if (reps > 0) cfg.replications = reps;
    if (delay_set) cfg.delay_threshold = delay;
    validate_config(cfg);

    std::vector<Strategy> strategies;
    if (strategy_names.empty()) {
        strategies = all_strategies();
    } else {
        for (const std::string& n : strategy_names)
            strategies.push_back(strategy_from_name(n));
    }

    fs::create_directories(out_dir);
    RunOptions opts;
    opts.workers = workers;

    const std::vector<StrategyRun> runs =
        run_strategies(cfg, strategies, window, opts);
    const std::string ext = gnuplot ? ".dat" : ".csv";
    for (const StrategyRun& r : runs) {
        const std::string slug = strategy_slug(r.strategy);
        write_series_csv(out_dir + "/" + slug + "_windowed" + ext,
                         strategy_label(r.strategy), r.windowed, gnuplot);
        write_series_csv(out_dir + "/" + slug + "_cumulative" + ext,
                         strategy_label(r.strategy), r.cumulative, gnuplot);
        std::printf("%-12s final-quartile success rate %.4f (se %.4f)\n",
                    strategy_label(r.strategy), r.final_quartile_rate,
                    r.final_quartile_stderr);
    }
    write_summary_csv(out_dir + "/summary" + ext, runs, gnuplot);
    std::printf("wrote %zu series files + summary to %s\n",
                2 * runs.size(), out_dir.c_str());
    return 0;
}

int cmd_validate_approx(std::uint32_t n_min, std::uint32_t n_max,
                        std::uint32_t n_step, std::uint32_t reps,
                        std::uint64_t horizon, std::uint64_t seed,
                        std::uint32_t max_attempts, std::uint32_t backoff,
                        double tx_prob, const std::string& out_path,
                        std::uint32_t workers, bool gnuplot) {
    std::vector<ValidateRow> rows;
    for (std::uint32_t n = n_min; n <= n_max; n += n_step) {
        ScenarioConfig cfg;
        cfg.n_devices = n;
        cfg.n_channels = 1;
        cfg.occupancy = {0.0};
        cfg.tx_prob = tx_prob;
        cfg.max_attempts = max_attempts;
        cfg.backoff_window = backoff;
        cfg.strategy = Strategy::NoLearning;
        cfg.horizon = horizon;
        cfg.replications = reps;
        cfg.master_seed = seed;
        RunOptions opts;
        opts.workers = workers;
        const ValidateRow row = run_validate_point(cfg, opts);
        std::printf("N=%-5u pc=%.4f pc1=%.4f pc1_approx=%.4f err=%.4f\n",
                    row.n_devices, row.pc_sim, row.pc1_sim, row.pc1_approx,
                    row.abs_err);
        rows.push_back(row);
    }
    write_validate_csv(out_path, rows, gnuplot);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

int cmd_analytic(double p_c, std::uint32_t n, std::uint32_t m) {
    const double x = x_from_pc(p_c, n);
    const double exact = p_ca_exact(p_c, n, m);
    const double closed = p_ca_closed(p_c, n, m);
    const double pc1 = p_c1_approx(p_c, n, m);
    std::printf("p_c          %.6f\n", p_c);
    std::printf("N            %u\n", n);
    std::printf("m            %u\n", m);
    std::printf("x            %.6g\n", x);
    std::printf("p_ca exact   %.6f\n", exact);
    std::printf("p_ca closed  %.6f  (|diff| %.3g)\n", closed,
                std::abs(exact - closed));
    std::printf("p_c1 approx  %.6f\n", pc1);
    std::printf("gap p_c1-p_c %.6f\n", pc1 - p_c);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slotted-ALOHA LPWA simulator with UCB channel selection"};
    app.require_subcommand(1);
    const std::uint32_t hw = std::max(1u, std::thread::hardware_concurrency());

    // simulate
    auto* sim = app.add_subcommand(
        "simulate", "Run a scenario over one or more strategies");
    std::string config_path;
    std::uint64_t seed = 0;
    std::uint32_t reps = 0;
    std::string out_dir = "out";
    std::vector<std::string> strategy_names;
    std::uint64_t window = 10000;
    std::uint32_t workers = hw;
    std::uint64_t delay = 0;
    bool gnuplot = false;
    sim->add_option("--config", config_path, "Scenario file")->required();
    auto* seed_opt = sim->add_option("--seed", seed, "Master seed override");
    sim->add_option("--reps", reps, "Replication count override");
    sim->add_option("--out", out_dir, "Output directory");
    sim->add_option("--strategies", strategy_names,
                    "Strategy names (default: all six)")
        ->delimiter(',');
    sim->add_option("--window", window, "Smoothing window in slots");
    sim->add_option("--workers", workers, "Worker threads");
    auto* delay_opt =
        sim->add_option("--delay", delay, "Delayed-UCB threshold in slots");
    sim->add_flag("--gnuplot", gnuplot,
                  "Whitespace-separated output instead of CSV");

    // validate-approx
    auto* val = app.add_subcommand(
        "validate-approx",
        "Sweep N on a single channel and compare simulated vs analytic p_c1");
    std::uint32_t n_min = 50, n_max = 400, n_step = 50;
    std::uint32_t v_reps = 50;
    std::uint64_t v_horizon = 200000, v_seed = 1;
    std::uint32_t v_max_attempts = 10, v_backoff = 10;
    double v_tx_prob = 1e-3;
    std::string v_out = "validate_approx.csv";
    std::uint32_t v_workers = hw;
    bool v_gnuplot = false;
    val->add_option("--n-min", n_min, "Smallest N");
    val->add_option("--n-max", n_max, "Largest N");
    val->add_option("--n-step", n_step, "N increment")
        ->check(CLI::PositiveNumber);
    val->add_option("--reps", v_reps, "Replications per N");
    val->add_option("--horizon", v_horizon, "Slots per replication");
    val->add_option("--seed", v_seed, "Master seed");
    val->add_option("--max-attempts", v_max_attempts, "M");
    val->add_option("--backoff", v_backoff, "Back-off window m");
    val->add_option("--tx-prob", v_tx_prob, "Per-slot transmit probability p");
    val->add_option("--out", v_out, "Output file");
    val->add_option("--workers", v_workers, "Worker threads");
    val->add_flag("--gnuplot", v_gnuplot,
                  "Whitespace-separated output instead of CSV");

    // analytic
    auto* ana = app.add_subcommand(
        "analytic", "Print the analytic collision probabilities");
    double a_pc = 0.1;
    std::uint32_t a_n = 100, a_m = 10;
    ana->add_option("--pc", a_pc, "First-transmission collision probability")
        ->required();
    ana->add_option("--n", a_n, "Number of devices N")->required();
    ana->add_option("--m", a_m, "Back-off window m")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim)
            return cmd_simulate(config_path, seed, seed_opt->count() > 0,
                                reps, out_dir, strategy_names, window,
                                workers, delay, delay_opt->count() > 0,
                                gnuplot);
        if (*val)
            return cmd_validate_approx(n_min, n_max, n_step, v_reps,
                                       v_horizon, v_seed, v_max_attempts,
                                       v_backoff, v_tx_prob, v_out, v_workers,
                                       v_gnuplot);
        if (*ana) return cmd_analytic(a_pc, a_n, a_m);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

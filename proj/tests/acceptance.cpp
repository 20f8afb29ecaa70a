// Acceptance suite: one pass/fail line per criterion. Long-running; the
// heavy scenario runs reuse the same machinery as the CLI.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lpwan/analytic.hpp"
#include "lpwan/engine.hpp"
#include "lpwan/metrics.hpp"
#include "lpwan/rng.hpp"
#include "lpwan/runner.hpp"
#include "lpwan/ucb.hpp"

using namespace lpwan;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id,
                name, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

RunOptions desk_options() {
    RunOptions o;
    o.workers = std::max(1u, std::thread::hardware_concurrency());
    return o;
}

ScenarioConfig validate_sweep_config(std::uint32_t n, std::uint32_t reps) {
    ScenarioConfig cfg;
    cfg.n_devices = n;
    cfg.n_channels = 1;
    cfg.occupancy = {0.0};
    cfg.tx_prob = 1e-3;
    cfg.max_attempts = 10;
    cfg.backoff_window = 10;
    cfg.strategy = Strategy::NoLearning;
    cfg.horizon = 200000;
    cfg.replications = reps;
    cfg.master_seed = 424242;
    return cfg;
}

// ---- criteria 1 + 2 (simulation side) ------------------------------------

void criteria_fig2() {
    const std::vector<std::uint32_t> sweep = {50, 100, 200, 300, 400};
    std::vector<ValidateRow> rows;
    for (std::uint32_t n : sweep)
        rows.push_back(
            run_validate_point(validate_sweep_config(n, 50), desk_options()));

    bool fidelity = true;
    std::ostringstream fid_detail;
    for (const ValidateRow& r : rows) {
        fid_detail << "N=" << r.n_devices << " err=" << r.abs_err << " ";
        if (r.pc1_sim <= 0.30 && r.abs_err > 0.03) fidelity = false;
    }
    report(1, "approximation fidelity (|pc1_sim - pc1_approx| <= 0.03)",
           fidelity, fid_detail.str());

    bool gap_positive = true;
    double max_gap = 0.0;
    for (const ValidateRow& r : rows) {
        const double gap = r.pc1_sim - r.pc_sim;
        if (gap <= 0.0) gap_positive = false;
        max_gap = std::max(max_gap, gap);
    }
    bool analytic_monotone = true;
    for (std::uint32_t n_dev : {100u, 400u}) {
        for (std::uint32_t m : {5u, 10u}) {
            double prev = 2.0;
            for (double pc = 0.01; pc <= 0.95; pc += 0.01) {
                const double gap = p_c1_approx(pc, n_dev, m) - pc;
                if (gap > prev + 1e-9) analytic_monotone = false;
                prev = gap;
            }
        }
    }
    std::ostringstream gap_detail;
    gap_detail << "max gap=" << max_gap
               << (analytic_monotone ? ", analytic gap monotone"
                                     : ", analytic gap NOT monotone");
    report(2, "gap existence and trend",
           gap_positive && max_gap >= 0.05 && analytic_monotone,
           gap_detail.str());
}

// ---- criterion 3 ---------------------------------------------------------

void criterion_closed_form() {
    bool ok = true;
    double worst = 0.0;
    for (std::uint32_t n_dev = 50; n_dev <= 1000; n_dev += 50) {
        const double pc_max = pc_from_x(0.01, n_dev);
        for (std::uint32_t m : {2u, 5u, 10u}) {
            for (double pc = 0.001; pc < pc_max; pc += pc_max / 40.0) {
                const double diff =
                    std::abs(p_ca_exact(pc, n_dev, m) -
                             p_ca_closed(pc, n_dev, m));
                worst = std::max(worst, diff);
                if (diff > 0.02) ok = false;
            }
        }
    }
    std::ostringstream detail;
    detail << "max |exact-closed|=" << worst;
    report(3, "oracle equivalence of closed form (x <= 0.01)", ok,
           detail.str());
}

// ---- criteria 4 + 5 ------------------------------------------------------

std::vector<Strategy> all_strategies() {
    return {Strategy::NoLearning,  Strategy::OnlyUcb,
            Strategy::RandomRetrans, Strategy::UcbRetrans,
            Strategy::KUcbRetrans, Strategy::DelayedUcbRetrans};
}

std::map<Strategy, std::pair<double, double>> scenario_rates(
    const ScenarioConfig& cfg) {
    std::map<Strategy, std::pair<double, double>> out;
    for (Strategy s : all_strategies()) {
        ScenarioConfig c = cfg;
        c.strategy = s;
        const auto reps = run_replications(c, desk_options());
        out[s] = final_window_stats(reps, 0.25);
    }
    return out;
}

ScenarioConfig scenario1() {
    ScenarioConfig cfg;
    cfg.n_devices = 1000;
    cfg.n_channels = 4;
    cfg.tx_prob = 1e-3;
    cfg.max_attempts = 5;
    cfg.backoff_window = 5;
    cfg.occupancy = {0.1, 0.3, 0.3, 0.3};
    cfg.horizon = 200000;
    cfg.replications = 10;
    cfg.master_seed = 20190401;
    cfg.delay_threshold = 20000;
    return cfg;
}

ScenarioConfig scenario2() {
    ScenarioConfig cfg = scenario1();
    cfg.n_devices = 2000;
    cfg.backoff_window = 10;
    cfg.occupancy = {0.4, 0.3, 0.2, 0.1};
    cfg.master_seed = 20190402;
    return cfg;
}

std::string rates_detail(
    const std::map<Strategy, std::pair<double, double>>& rates) {
    std::ostringstream os;
    for (const auto& [s, r] : rates)
        os << strategy_slug(s) << "=" << r.first << " ";
    return os.str();
}

void criterion_scenario1() {
    const auto rates = scenario_rates(scenario1());
    const double baseline = rates.at(Strategy::NoLearning).first;

    bool learning_wins = true;
    for (Strategy s : all_strategies()) {
        if (s == Strategy::NoLearning) continue;
        if (rates.at(s).first < baseline + 0.05) learning_wins = false;
    }
    double best = 0.0, best_se = 0.0;
    for (Strategy s : all_strategies()) {
        if (s == Strategy::NoLearning) continue;
        if (rates.at(s).first > best) {
            best = rates.at(s).first;
            best_se = rates.at(s).second;
        }
    }
    const auto [only, only_se] = rates.at(Strategy::OnlyUcb);
    const bool only_best =
        only >= best - 2.0 * std::hypot(best_se, only_se);
    report(4, "scenario 1 ordering", learning_wins && only_best,
           rates_detail(rates));
}

void criterion_scenario2() {
    const auto rates = scenario_rates(scenario2());
    const double baseline = rates.at(Strategy::NoLearning).first;

    bool learning_wins = true;
    for (Strategy s : all_strategies()) {
        if (s == Strategy::NoLearning) continue;
        if (rates.at(s).first < baseline + 0.15) learning_wins = false;
    }
    const auto [rnd, rnd_se] = rates.at(Strategy::RandomRetrans);
    bool random_worst = true;
    for (Strategy s : {Strategy::UcbRetrans, Strategy::KUcbRetrans,
                       Strategy::DelayedUcbRetrans}) {
        const auto [r, se] = rates.at(s);
        if (!(r - rnd > 2.0 * std::hypot(se, rnd_se))) random_worst = false;
    }
    report(5, "scenario 2 separation", learning_wins && random_worst,
           rates_detail(rates));
}

// ---- criterion 6 ---------------------------------------------------------

void criterion_ucb_units() {
    bool ok = true;
    std::string what;

    // selection-oracle equivalence over random attempt logs
    std::mt19937_64 gen(1234);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        const std::uint32_t n_arms = 1 + gen() % 6;
        UcbLearner l(n_arms, 0.5);
        std::vector<std::uint64_t> pulls(n_arms, 0);
        std::vector<double> sums(n_arms, 0.0);
        const int len = gen() % 50;
        for (int i = 0; i < len; ++i) {
            const std::uint32_t ch = gen() % n_arms;
            const double r = (gen() & 1) ? 1.0 : 0.0;
            learner_update(l, ch, r);
            ++pulls[ch];
            sums[ch] += r;
        }
        const double log_now = std::max(0.0, std::log(double(len + 1)));
        double best = -1.0;
        std::vector<double> u(n_arms);
        for (std::uint32_t k = 0; k < n_arms; ++k) {
            u[k] = pulls[k] == 0
                       ? std::numeric_limits<double>::infinity()
                       : sums[k] / pulls[k] +
                             std::sqrt(0.5 * log_now / pulls[k]);
            best = std::max(best, u[k]);
        }
        auto rng = make_engine(trial, 1, 0);
        const std::uint32_t chosen = learner_select(l, rng);
        const bool in_tie_set =
            std::isinf(best) ? l.pulls[chosen] == 0
                             : std::abs(u[chosen] - best) <= 1e-9;
        if (!in_tie_set) {
            ok = false;
            what = "selection-oracle mismatch";
        }
    }

    // unplayed-arm priority
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const std::uint32_t n_arms = 2 + gen() % 5;
        UcbLearner l(n_arms, 0.5);
        const std::uint32_t hole = gen() % n_arms;
        for (std::uint32_t k = 0; k < n_arms; ++k)
            if (k != hole) learner_update(l, k, 1.0);
        auto rng = make_engine(trial, 2, 0);
        if (learner_select(l, rng) != hole) {
            ok = false;
            what = "unplayed-arm priority violated";
        }
    }

    // stage isolation for all two-stage strategies
    for (Strategy kind : {Strategy::RandomRetrans, Strategy::UcbRetrans,
                          Strategy::KUcbRetrans,
                          Strategy::DelayedUcbRetrans}) {
        auto s = StrategyState::make(kind, 4, 0.5, 0);
        DeviceState first;
        first.phase = Phase::ReadyToTransmit;
        DeviceState retrans = first;
        retrans.attempt_index = 1;
        retrans.first_channel = 1;
        auto second_stage_attempts = [&s] {
            std::uint64_t n = 0;
            if (s.retrans_single) n += s.retrans_single->attempts;
            for (const UcbLearner& l : s.retrans_per_channel)
                n += l.attempts;
            return n;
        };
        strategy_observe(s, first, 0, 10, 1.0);
        if (s.first_stage->attempts != 1 || second_stage_attempts() != 0) {
            ok = false;
            what = "stage isolation (first attempt)";
        }
        strategy_observe(s, retrans, 2, 10, 0.0);
        if (s.first_stage->attempts != 1) {
            ok = false;
            what = "stage isolation (retransmission)";
        }
    }

    // tie-break uniformity within 3 sigma
    {
        UcbLearner l(4, 0.5);
        auto rng = make_engine(77, 3, 0);
        const int draws = 10000;
        std::vector<int> counts(4, 0);
        for (int i = 0; i < draws; ++i) ++counts[learner_select(l, rng)];
        const double sigma = std::sqrt(draws * 0.25 * 0.75);
        for (int c : counts)
            if (std::abs(c - draws / 4.0) > 3 * sigma) {
                ok = false;
                what = "tie-break uniformity";
            }
    }

    report(6, "UCB unit correctness", ok, what);
}

// ---- criterion 7 ---------------------------------------------------------

std::string file_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_determinism() {
    ScenarioConfig cfg = scenario1();
    cfg.n_devices = 100;
    cfg.horizon = 20000;
    cfg.replications = 6;
    cfg.delay_threshold = 2000;

    const auto strategies = all_strategies();
    bool ok = true;
    std::vector<std::string> snapshots;
    for (std::uint32_t workers : {1u, 3u, 6u}) {
        RunOptions opts;
        opts.workers = workers;
        const auto runs = run_strategies(cfg, strategies, 2000, opts);
        const fs::path dir =
            fs::temp_directory_path() / ("lpwan_det_" + std::to_string(workers));
        fs::create_directories(dir);
        std::string all;
        for (const StrategyRun& r : runs) {
            const fs::path f = dir / (std::string(strategy_slug(r.strategy)) +
                                      "_windowed.csv");
            write_series_csv(f.string(), strategy_label(r.strategy),
                             r.windowed);
            all += file_bytes(f);
        }
        snapshots.push_back(all);
    }
    for (const std::string& s : snapshots)
        if (s != snapshots.front()) ok = false;
    report(7, "determinism across runs and worker counts", ok,
           ok ? "byte-identical CSVs" : "outputs differ");
}

// ---- criterion 8 ---------------------------------------------------------

void criterion_conservation() {
    std::mt19937_64 gen(2024);
    bool ok = true;
    std::string what;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        ScenarioConfig cfg;
        cfg.n_devices = 1 + gen() % 60;
        cfg.n_channels = 1 + gen() % 5;
        cfg.tx_prob = 0.001 + (gen() % 1000) / 1001.0;
        cfg.max_attempts = 1 + gen() % 8;
        cfg.backoff_window = 1 + gen() % 12;
        cfg.occupancy.clear();
        for (std::uint32_t k = 0; k < cfg.n_channels; ++k)
            cfg.occupancy.push_back((gen() % 100) / 101.0);
        cfg.strategy = all_strategies()[gen() % 6];
        cfg.horizon = 10000;
        cfg.delay_threshold = gen() % cfg.horizon;
        cfg.master_seed = gen();
        validate_config(cfg);

        EngineOptions opts;
        opts.record_attempts = true;
        opts.track_series = false;
        const auto res = run_replication(cfg, 0, opts);
        if (res.generated_packets != res.delivered_packets +
                                         res.dropped_packets +
                                         res.in_flight_at_end) {
            ok = false;
            what = "packet accounting mismatch";
        }
        // every packet's attempt count <= M: attempt_index never reaches M
        std::map<std::uint32_t, std::uint32_t> open_attempts;
        for (const AttemptRecord& a : res.attempt_log) {
            if (a.attempt_index >= cfg.max_attempts) {
                ok = false;
                what = "attempt_index >= M";
            }
            if (a.attempt_index == 0)
                open_attempts[a.device] = 1;
            else if (++open_attempts[a.device] != a.attempt_index + 1) {
                ok = false;
                what = "non-consecutive attempt index";
            }
        }
    }
    report(8, "conservation fuzz over random valid configs", ok, what);
}

}  // namespace

int main() {
    std::printf("acceptance suite (desk scale)\n");
    criterion_ucb_units();
    criterion_closed_form();
    criterion_conservation();
    criterion_determinism();
    criteria_fig2();
    criterion_scenario1();
    criterion_scenario2();
    std::printf("%d criterion failure(s)\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}

#include "doctest.h"
#include "lpwan/config.hpp"

using namespace lpwan;

namespace {

ScenarioConfig paper_scenario1() {
    ScenarioConfig cfg;
    cfg.n_devices = 1000;
    cfg.n_channels = 4;
    cfg.tx_prob = 1e-3;
    cfg.max_attempts = 5;
    cfg.backoff_window = 5;
    cfg.occupancy = {0.1, 0.3, 0.3, 0.3};
    cfg.horizon = 200000;
    return cfg;
}

}  // namespace

TEST_CASE("scenario 1 parameters validate") {
    const ScenarioConfig cfg = paper_scenario1();
    CHECK_NOTHROW(validate_config(cfg));
}

TEST_CASE("occupancy length must match n_channels") {
    ScenarioConfig cfg = paper_scenario1();
    cfg.n_channels = 2;
    cfg.occupancy = {0.1};
    CHECK_THROWS_WITH_AS(validate_config(cfg),
                         "occupancy length != n_channels", ConfigError);
}

TEST_CASE("backoff_window zero is rejected") {
    ScenarioConfig cfg = paper_scenario1();
    cfg.backoff_window = 0;
    CHECK_THROWS_WITH_AS(validate_config(cfg),
                         "backoff_window must be >= 1", ConfigError);
}

TEST_CASE("occupancy of 1 is rejected") {
    ScenarioConfig cfg = paper_scenario1();
    cfg.occupancy[0] = 1.0;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
}

TEST_CASE("delay_threshold above horizon is rejected") {
    ScenarioConfig cfg = paper_scenario1();
    cfg.delay_threshold = cfg.horizon + 1;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
}

TEST_CASE("strategy names round-trip through labels and slugs") {
    for (Strategy s : {Strategy::NoLearning, Strategy::OnlyUcb,
                       Strategy::RandomRetrans, Strategy::UcbRetrans,
                       Strategy::KUcbRetrans, Strategy::DelayedUcbRetrans}) {
        CHECK(strategy_from_name(strategy_label(s)) == s);
        CHECK(strategy_from_name(strategy_slug(s)) == s);
    }
    CHECK_THROWS_AS(strategy_from_name("thompson"), ConfigError);
}

#include "lpwan/config.hpp"

namespace lpwan {

const char* strategy_label(Strategy s) {
    switch (s) {
        case Strategy::NoLearning: return "no UCB";
        case Strategy::OnlyUcb: return "Only UCB";
        case Strategy::RandomRetrans: return "Random";
        case Strategy::UcbRetrans: return "UCB";
        case Strategy::KUcbRetrans: return "K UCB";
        case Strategy::DelayedUcbRetrans: return "Delayed UCB";
    }
    return "?";
}

const char* strategy_slug(Strategy s) {
    switch (s) {
        case Strategy::NoLearning: return "no_ucb";
        case Strategy::OnlyUcb: return "only_ucb";
        case Strategy::RandomRetrans: return "random";
        case Strategy::UcbRetrans: return "ucb";
        case Strategy::KUcbRetrans: return "k_ucb";
        case Strategy::DelayedUcbRetrans: return "delayed_ucb";
    }
    return "?";
}

Strategy strategy_from_name(const std::string& name) {
    for (Strategy s : {Strategy::NoLearning, Strategy::OnlyUcb,
                       Strategy::RandomRetrans, Strategy::UcbRetrans,
                       Strategy::KUcbRetrans, Strategy::DelayedUcbRetrans}) {
        if (name == strategy_slug(s) || name == strategy_label(s)) return s;
    }
    // config-file spellings
    if (name == "NoLearning") return Strategy::NoLearning;
    if (name == "OnlyUcb") return Strategy::OnlyUcb;
    if (name == "RandomRetrans") return Strategy::RandomRetrans;
    if (name == "UcbRetrans") return Strategy::UcbRetrans;
    if (name == "KUcbRetrans") return Strategy::KUcbRetrans;
    if (name == "DelayedUcbRetrans") return Strategy::DelayedUcbRetrans;
    throw ConfigError("unknown strategy name: " + name);
}

const ScenarioConfig& validate_config(const ScenarioConfig& cfg) {
    if (cfg.n_devices < 1) throw ConfigError("n_devices must be >= 1");
    if (cfg.n_channels < 1) throw ConfigError("n_channels must be >= 1");
    if (!(cfg.tx_prob > 0.0 && cfg.tx_prob <= 1.0))
        throw ConfigError("tx_prob must be in (0,1]");
    if (cfg.max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
    if (cfg.backoff_window < 1) throw ConfigError("backoff_window must be >= 1");
    if (cfg.occupancy.size() != cfg.n_channels)
        throw ConfigError("occupancy length != n_channels");
    for (double o : cfg.occupancy)
        if (!(o >= 0.0 && o < 1.0))
            throw ConfigError("occupancy entries must be in [0,1)");
    if (cfg.horizon < 1) throw ConfigError("horizon must be >= 1");
    if (cfg.delay_threshold > cfg.horizon)
        throw ConfigError("delay_threshold must be <= horizon");
    if (cfg.replications < 1) throw ConfigError("replications must be >= 1");
    if (!(cfg.alpha > 0.0)) throw ConfigError("alpha must be > 0");
    return cfg;
}

}  // namespace lpwan

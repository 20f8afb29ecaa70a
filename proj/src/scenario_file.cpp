#include "lpwan/scenario_file.hpp"

#include <fstream>
#include <sstream>

namespace lpwan {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<double> parse_list(const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(trim(item)));
    return out;
}

bool parse_bool(const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("expected boolean, got: " + value);
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& text,
                                   const std::string& origin) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "n_devices") cfg.n_devices = std::stoul(value);
            else if (key == "n_channels") cfg.n_channels = std::stoul(value);
            else if (key == "tx_prob") cfg.tx_prob = std::stod(value);
            else if (key == "max_attempts") cfg.max_attempts = std::stoul(value);
            else if (key == "backoff_window") cfg.backoff_window = std::stoul(value);
            else if (key == "occupancy") cfg.occupancy = parse_list(value);
            else if (key == "strategy") cfg.strategy = strategy_from_name(value);
            else if (key == "delay_threshold") cfg.delay_threshold = std::stoull(value);
            else if (key == "horizon") cfg.horizon = std::stoull(value);
            else if (key == "replications") cfg.replications = std::stoul(value);
            else if (key == "master_seed") cfg.master_seed = std::stoull(value);
            else if (key == "alpha") cfg.alpha = std::stod(value);
            else if (key == "only_ucb_freeze") cfg.only_ucb_freeze = parse_bool(value);
            else
                throw ConfigError("unknown key: " + key);
        } catch (const ConfigError& e) {
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": " +
                              e.what());
        } catch (const std::exception& e) {
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": bad value for " + key + ": " + e.what());
        }
    }
    validate_config(cfg);
    return cfg;
}

ScenarioConfig parse_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path);
}

}  // namespace lpwan

#ifndef LPWAN_SCENARIO_FILE_HPP_
#define LPWAN_SCENARIO_FILE_HPP_

#include <string>

#include "lpwan/config.hpp"

namespace lpwan {

/// Parses a flat key = value scenario file ('#' starts a comment; occupancy
/// is a comma-separated list). Unknown keys are errors; the result is
/// validated before being returned.
ScenarioConfig parse_scenario(const std::string& path);

/// Same, from file contents (used by tests).
ScenarioConfig parse_scenario_text(const std::string& text,
                                   const std::string& origin = "<string>");

}  // namespace lpwan

#endif  // LPWAN_SCENARIO_FILE_HPP_

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace chaindeck {

// Tool-wide defaults, loadable from the JSON file named by the
// CHAINDECK_CONFIG environment variable. Command-line flags win over
// config values.
struct Config {
  int enumeration_bound = 9;
  std::int64_t oracle_budget = 100'000'000;  // applied to searches with n >= 6
  std::optional<std::string> output_dir;
  std::optional<std::uint64_t> seed;
};

Config parse_config(const std::string& text);
Config load_config_file(const std::string& path);

// Reads CHAINDECK_CONFIG; defaults when the variable is unset.
Config load_config_from_env();

// Joins output_dir onto relative output paths; absolute paths pass through.
std::string resolve_output_path(const Config& config, const std::string& path);

}  // namespace chaindeck

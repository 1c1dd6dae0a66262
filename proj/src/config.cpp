#include "chaindeck/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace chaindeck {

Config parse_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
  Config config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "enumeration_bound") config.enumeration_bound = value.get<int>();
    else if (key == "oracle_budget") config.oracle_budget = value.get<std::int64_t>();
    else if (key == "output_dir") config.output_dir = value.get<std::string>();
    else if (key == "seed") config.seed = value.get<std::uint64_t>();
    else throw std::invalid_argument("unknown config key \"" + key + "\"");
  }
  if (config.enumeration_bound < 3)
    throw std::invalid_argument("enumeration_bound must be at least 3");
  if (config.oracle_budget <= 0) throw std::invalid_argument("oracle_budget must be positive");
  return config;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

Config load_config_from_env() {
  const char* path = std::getenv("CHAINDECK_CONFIG");
  if (!path || !*path) return Config{};
  return load_config_file(path);
}

std::string resolve_output_path(const Config& config, const std::string& path) {
  if (!config.output_dir || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(*config.output_dir) / path).string();
}

}  // namespace chaindeck

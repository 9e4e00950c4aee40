#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace gtp::cli {

// One CLI run: the command, the effective config (file contents with flag
// overrides already merged in), and output options.
struct Invocation {
  std::string command;
  nlohmann::json config;
  std::optional<std::filesystem::path> cache_dir;
};

nlohmann::json load_config_file(const std::filesystem::path& path);

// Dispatches to the library and returns the full report document. Throws
// ConfigError for invalid configs and ResourceLimitError on ceilings.
nlohmann::json run_command(const Invocation& inv);

// "report" renders the JSON document; "csv" renders the tabular payload.
std::string render(const nlohmann::json& report, const std::string& format);

}  // namespace gtp::cli

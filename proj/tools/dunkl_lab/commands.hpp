#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace dunkl::lab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitConfig = 2;

struct CommandResult {
  nlohmann::json report;
  std::string csv;
  int exit_code = kExitPass;
};

const std::vector<std::string>& command_names();

/// Runs a named command on a validated config. Numeric failures are caught
/// and recorded under "errors" with exit code 1; configuration errors
/// propagate as ConfigError.
CommandResult run_command(const std::string& name, const ScenarioConfig& config);

/// The document that goes to --out in the configured format.
std::string render(const CommandResult& result, const std::string& format);

}  // namespace dunkl::lab

#pragma once

// Scenario configuration for dunkl_lab: a flat key = value file, overridable
// from the command line through the same setters.

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dunkl/besov.hpp"

namespace dunkl::lab {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double min = 0.05;
  double max = 5.0;
  int count = 32;
  /// "log" or "linear".
  std::string spacing = "log";

  std::vector<double> points() const;
  void validate() const;
};

struct ScenarioConfig {
  /// Kept as text so decimal literals stay exact for the Theta algebra.
  std::string alpha = "0.5";
  int k = 1;
  double p = 2.0;
  std::vector<double> q{2.0};
  std::vector<double> beta{0.5};
  std::string function = "gaussian(1)";
  GridSpec grid;
  double window_min = 1e-3;
  double window_max = 1e3;
  double tol = 1e-10;
  double spread = 50.0;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;

  /// Throws ConfigError naming the offending field.
  void validate() const;
  DunklParameter parameter() const;
  BesovSpecs specs() const;
  nlohmann::json to_json() const;
};

/// Parses `value` into the field named `key`. Throws ConfigError.
void apply_setting(ScenarioConfig& config, const std::string& key, const std::string& value);

/// Reads `key = value` lines; '#' starts a comment. Errors carry
/// "<source>:<line>".
ScenarioConfig load_config(std::istream& in, const std::string& source, ScenarioConfig base = {});
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {});

}  // namespace dunkl::lab

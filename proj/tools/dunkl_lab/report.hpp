#pragma once

// JSON and CSV serialization of dunkl_lab results.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dunkl/besov.hpp"

namespace dunkl::lab {

/// Finite values as numbers; inf, -inf and nan as strings, since JSON has
/// no literal for them.
nlohmann::json json_number(double v);

/// Shortest text that round-trips to the same double.
std::string format_real(double v);

/// One pass/fail line of a verification command.
struct Check {
  Check(std::string name_, double limit_) : name(std::move(name_)), limit(limit_) {}

  std::string name;
  /// Largest observed value of the checked quantity.
  double residual = 0.0;
  double limit = 0.0;
  int evaluations = 0;
  bool pass = true;
  std::string note;

  /// Folds one observation in; nan counts as a failure.
  void observe(double value);
};

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const BesovIndex& index);
nlohmann::json to_json(const EquivalenceReport& r);
nlohmann::json to_json(const SeminormResult& r);

std::string checks_csv(const std::vector<Check>& checks);
/// Columns x, omega, k_upper, ratio.
std::string equivalence_csv(const EquivalenceReport& r);

}  // namespace dunkl::lab

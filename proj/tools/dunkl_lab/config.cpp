#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "report.hpp"

namespace dunkl::lab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

[[noreturn]] void field_error(const std::string& key, const std::string& what) {
  throw ConfigError("field '" + key + "': " + what);
}

double parse_real(const std::string& key, const std::string& text) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    field_error(key, "not a number: '" + text + "'");
  }
  if (used != text.size()) field_error(key, "not a number: '" + text + "'");
  return v;
}

long long parse_integer(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    field_error(key, "not an integer: '" + text + "'");
  }
  if (used != text.size()) field_error(key, "not an integer: '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_real(key, item));
  if (out.empty()) field_error(key, "empty list");
  return out;
}

}  // namespace

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    out[i] = spacing == "log" ? min * std::pow(max / min, t) : min + (max - min) * t;
  }
  out.back() = max;
  return out;
}

void GridSpec::validate() const {
  if (!(min > 0.0)) field_error("grid", "min must be > 0");
  if (!(max >= min) || !std::isfinite(max)) field_error("grid", "max must be finite and >= min");
  if (count < 1 || count > 4096) field_error("grid", "count must lie in [1, 4096]");
  if (count > 1 && max == min) field_error("grid", "max must exceed min when count > 1");
  if (spacing != "log" && spacing != "linear") field_error("grid", "spacing must be 'log' or 'linear'");
}

void ScenarioConfig::validate() const {
  try {
    (void)DunklParameter::parse(alpha);
  } catch (const std::invalid_argument& e) {
    field_error("alpha", e.what());
  }
  if (k < 1) field_error("k", "k must be >= 1");
  if (!(p >= 1.0) || !std::isfinite(p)) field_error("p", "p must lie in [1, inf)");
  for (double v : q) {
    if (!(v >= 1.0)) field_error("q", "q must be >= 1 or inf");
  }
  for (double v : beta) {
    if (!(v > 0.0 && v < 1.0)) field_error("beta", "beta must lie in (0, 1)");
  }
  try {
    (void)make_catalog_function(function);
  } catch (const std::invalid_argument& e) {
    field_error("function", e.what());
  }
  grid.validate();
  if (!(window_min > 0.0) || !(window_max > window_min) || !std::isfinite(window_max)) {
    field_error("window", "need 0 < min < max < inf");
  }
  if (!(tol > 0.0 && tol < 1e-2)) field_error("tol", "tol must lie in (0, 1e-2)");
  if (!(spread >= 1.0) || !std::isfinite(spread)) field_error("spread", "spread must be finite and >= 1");
  if (format != "json" && format != "csv") field_error("format", "format must be 'json' or 'csv'");
}

DunklParameter ScenarioConfig::parameter() const { return DunklParameter::parse(alpha); }

BesovSpecs ScenarioConfig::specs() const {
  BesovSpecs s;
  s.quad.rel_tol = tol;
  s.kernel.tolerance = tol;
  return s;
}

nlohmann::json ScenarioConfig::to_json() const {
  nlohmann::json q_list = nlohmann::json::array();
  for (double v : q) q_list.push_back(json_number(v));
  return {
      {"alpha", parameter().alpha()},
      {"k", k},
      {"p", p},
      {"q", q_list},
      {"beta", beta},
      {"function", function},
      {"grid", {{"min", grid.min}, {"max", grid.max}, {"count", grid.count}, {"spacing", grid.spacing}}},
      {"window", {{"min", window_min}, {"max", window_max}}},
      {"tol", tol},
      {"spread", spread},
      {"format", format},
      {"seed", seed},
  };
}

void apply_setting(ScenarioConfig& c, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (value.empty()) field_error(key, "empty value");
  if (key == "alpha") {
    try {
      (void)DunklParameter::parse(value);
    } catch (const std::invalid_argument& e) {
      field_error(key, e.what());
    }
    c.alpha = value;
  } else if (key == "k") {
    const long long k = parse_integer(key, value);
    if (k < 1 || k > 16) field_error(key, "k must lie in [1, 16]");
    c.k = static_cast<int>(k);
  } else if (key == "p") {
    c.p = parse_real(key, value);
  } else if (key == "q") {
    c.q = parse_list(key, value);
  } else if (key == "beta") {
    c.beta = parse_list(key, value);
  } else if (key == "function") {
    c.function = value;
  } else if (key == "grid") {
    // min,max,count[,spacing]
    const std::vector<std::string> parts = split(value, ',');
    if (parts.size() != 3 && parts.size() != 4) field_error(key, "expected min,max,count[,log|linear]");
    c.grid.min = parse_real(key, parts[0]);
    c.grid.max = parse_real(key, parts[1]);
    c.grid.count = static_cast<int>(parse_integer(key, parts[2]));
    if (parts.size() == 4) c.grid.spacing = parts[3];
  } else if (key == "grid.min") {
    c.grid.min = parse_real(key, value);
  } else if (key == "grid.max") {
    c.grid.max = parse_real(key, value);
  } else if (key == "grid.count") {
    c.grid.count = static_cast<int>(parse_integer(key, value));
  } else if (key == "grid.spacing") {
    c.grid.spacing = value;
  } else if (key == "window") {
    const std::vector<std::string> parts = split(value, ',');
    if (parts.size() != 2) field_error(key, "expected min,max");
    c.window_min = parse_real(key, parts[0]);
    c.window_max = parse_real(key, parts[1]);
  } else if (key == "tol") {
    c.tol = parse_real(key, value);
  } else if (key == "spread") {
    c.spread = parse_real(key, value);
  } else if (key == "out") {
    c.out = value;
  } else if (key == "format") {
    c.format = value;
  } else if (key == "seed") {
    const long long s = parse_integer(key, value);
    if (s < 0) field_error(key, "seed must be >= 0");
    c.seed = static_cast<std::uint64_t>(s);
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

ScenarioConfig load_config(std::istream& in, const std::string& source, ScenarioConfig base) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = source + ":" + std::to_string(number) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
    try {
      apply_setting(base, trim(body.substr(0, eq)), body.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  return base;
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return load_config(in, path, std::move(base));
}

}  // namespace dunkl::lab

#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace dunkl::lab {

nlohmann::json json_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  return v;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void Check::observe(double value) {
  ++evaluations;
  if (std::isnan(value)) {
    residual = value;
    pass = false;
    return;
  }
  if (!std::isnan(residual)) residual = std::max(residual, value);
  pass = pass && value <= limit;
}

nlohmann::json to_json(const Check& c) {
  nlohmann::json j{{"name", c.name},
                   {"residual", json_number(c.residual)},
                   {"limit", json_number(c.limit)},
                   {"evaluations", c.evaluations},
                   {"pass", c.pass}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

nlohmann::json to_json(const BesovIndex& index) {
  return {{"beta", index.beta}, {"p", index.p}, {"q", json_number(index.q)}, {"k", index.k}};
}

namespace {

nlohmann::json numbers(const std::vector<double>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (double x : v) out.push_back(json_number(x));
  return out;
}

}  // namespace

nlohmann::json to_json(const EquivalenceReport& r) {
  return {
      {"function", r.function},
      {"alpha", r.alpha},
      {"index", to_json(r.index)},
      {"x_grid", numbers(r.x_grid)},
      {"omega", numbers(r.omega)},
      {"omega_error", numbers(r.omega_error)},
      {"k_upper", numbers(r.k_upper)},
      {"k_winner", r.k_winner},
      {"ratio", numbers(r.ratio)},
      {"c_low", json_number(r.c_low)},
      {"c_high", json_number(r.c_high)},
      {"spread", json_number(r.spread())},
      {"admissible_spread", json_number(r.admissible_spread)},
      {"status", r.status},
  };
}

nlohmann::json to_json(const SeminormResult& r) {
  return {
      {"value", json_number(r.value)},
      {"truncated", json_number(r.truncated)},
      {"tail_low", json_number(r.tail_low)},
      {"tail_high", json_number(r.tail_high)},
      {"total", json_number(r.total())},
      {"x_min", r.x_min},
      {"x_max", r.x_max},
      {"samples", r.samples},
  };
}

std::string checks_csv(const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "name,residual,limit,evaluations,pass\n";
  for (const Check& c : checks) {
    os << c.name << ',' << format_real(c.residual) << ',' << format_real(c.limit) << ',' << c.evaluations << ','
       << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string equivalence_csv(const EquivalenceReport& r) {
  std::ostringstream os;
  os << "x,omega,k_upper,ratio\n";
  for (std::size_t i = 0; i < r.x_grid.size(); ++i) {
    os << format_real(r.x_grid[i]) << ',' << format_real(r.omega[i]) << ',' << format_real(r.k_upper[i]) << ','
       << format_real(r.ratio[i]) << '\n';
  }
  return os.str();
}

}  // namespace dunkl::lab

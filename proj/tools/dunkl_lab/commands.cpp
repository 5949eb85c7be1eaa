#include "commands.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <utility>

#include "dunkl/besov.hpp"
#include "dunkl/remainder.hpp"
#include "dunkl/theta.hpp"
#include "dunkl/translation.hpp"
#include "report.hpp"

#ifndef DUNKL_LAB_VERSION
#define DUNKL_LAB_VERSION "dev"
#endif

namespace dunkl::lab {

namespace {

using Json = nlohmann::json;

// Fixed spot points plus `extra` seeded ones drawn from [-r, r] with |x| >= 0.05.
std::vector<double> spot_points(std::vector<double> fixed, std::mt19937_64& rng, int extra, double r) {
  std::uniform_real_distribution<double> u(0.05, r);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < extra; ++i) {
    const double v = u(rng);
    fixed.push_back(sign(rng) ? v : -v);
  }
  return fixed;
}

std::vector<std::pair<double, double>> spot_pairs(std::vector<std::pair<double, double>> fixed, std::mt19937_64& rng,
                                                  int extra) {
  std::uniform_real_distribution<double> ux(0.05, 2.0);
  std::uniform_real_distribution<double> ua(-2.0, 2.0);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < extra; ++i) {
    const double x = ux(rng);
    fixed.emplace_back(sign(rng) ? x : -x, ua(rng));
  }
  return fixed;
}

double relative(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

Json base_report(const std::string& command, const ScenarioConfig& config) {
  return {{"tool", "dunkl_lab"},
          {"version", DUNKL_LAB_VERSION},
          {"command", command},
          {"config", config.to_json()},
          {"errors", Json::array()}};
}

CommandResult finish_checks(Json report, const std::vector<Check>& checks) {
  bool pass = true;
  Json list = Json::array();
  for (const Check& c : checks) {
    list.push_back(to_json(c));
    pass = pass && c.pass;
  }
  report["checks"] = list;
  report["pass"] = pass;
  return {report, checks_csv(checks), pass ? kExitPass : kExitNumeric};
}

const Polynomial kSextic{0.3, -1.0, 0.5, 0.25, -0.2, 0.1, 0.05};

// Polynomial behind a catalog entry with no gaussian factor, if any.
const Polynomial* as_polynomial(const SmoothFunction& f) {
  const auto* pg = dynamic_cast<const PolyGaussian*>(&f);
  return pg != nullptr && pg->rate() == 0.0 ? &pg->prefactor() : nullptr;
}

// --- verify-identities -------------------------------------------------------------

CommandResult verify_identities(const ScenarioConfig& config) {
  const DunklParameter param = config.parameter();
  const BesovSpecs specs = config.specs();
  std::mt19937_64 rng(config.seed);
  const std::vector<double> xs = spot_points({0.1, 1.0, 3.0, -2.0}, rng, 3, 3.0);
  const auto pairs = spot_pairs({{0.5, 0.3}, {-1.2, 0.8}, {2.0, -1.5}}, rng, 2);
  const TestFunction f = make_test_function(param, config.function, 4);
  const TranslationKernel tau(param, specs.kernel);
  const Theta0Rule rule(param, specs.theta0_nodes);

  Check moment{"theta0_moment", 1e-8};
  for (int p = 0; p <= 5; ++p) {
    for (double x : xs) {
      const MomentResult m = theta_moment(param, p, x, specs.quad);
      moment.observe(std::abs(m.value - m.expected) / (1.0 + std::abs(m.expected)));
    }
  }

  Check bound{"theta_abs_bound", 1e-8};
  for (int k = 1; k <= 4; ++k) {
    for (double x : xs) bound.observe(theta_abs_integral(param, k, x, specs.quad).value - theta_abs_bound(param, k, x));
  }

  Check conv{"theta0_convolution", 1e-7};
  Check routes{"route_agreement", 1e-7};
  for (int k = 1; k <= 3; ++k) {
    for (auto [x, a] : pairs) {
      const double r = remainder_recursive(f, k, x, a, tau);
      conv.observe(relative(remainder_convolution(f, k, x, a, tau, specs.quad).value, r));
      routes.observe(relative(remainder_direct(f, k, x, a, tau, specs.quad).value, r));
    }
  }

  Check exact{"iterated_integral_exact", 1e-12};
  for (int k = 1; k <= 5; ++k) {
    for (double x : {-2.0, 0.6, 3.0}) {
      const Polynomial lhs = poly_dunkl_power(param, iterated_I_poly(param, kSextic, k, x), k);
      const Polynomial rhs = remainder_poly(param, kSextic, k, x);
      for (double y : {-1.5, 0.0, 0.7, 2.0}) exact.observe(relative(lhs(y), rhs(y)));
    }
  }

  Check numeric{"iterated_integral_numeric", 1e-6};
  for (int k = 1; k <= 2; ++k) {
    for (auto [x, a] : pairs) {
      numeric.observe(std::abs(dunkl_of_iterated_I(f, k, x, a, tau, rule) - remainder_recursive(f, k, x, a, tau)));
    }
  }
  return finish_checks(base_report("verify-identities", config), {moment, bound, conv, routes, exact, numeric});
}

// --- operator-properties ------------------------------------------------------------

CommandResult operator_properties(const ScenarioConfig& config) {
  const DunklParameter param = config.parameter();
  const BesovSpecs specs = config.specs();
  std::mt19937_64 rng(config.seed);
  const std::vector<double> xs = spot_points({0.5, -1.3, 3.0}, rng, 2, 3.0);
  const auto pairs = spot_pairs({{0.3, 1.7}, {-1.1, 0.6}, {-2.0, -0.4}, {1.0, 1.0}}, rng, 2);
  const TestFunction f = make_test_function(param, config.function, 2);
  const TranslationKernel tau(param, specs.kernel);
  std::vector<Check> checks;

  Check contraction{"contraction", std::numbers::sqrt2 + 1e-6};
  if (f.decay().integrable()) {
    for (double x : xs) {
      for (double p : {1.0, 2.0, 4.0}) contraction.observe(translation_contraction_check(f, x, p, specs.quad, specs.kernel));
    }
  } else {
    contraction.note = "skipped: function has no decay";
  }
  checks.push_back(contraction);

  Check symmetry{"translation_symmetry", 1e-9};
  for (auto [x, y] : pairs) symmetry.observe(std::abs(tau(f.level(0), x, y) - tau(f.level(0), y, x)));
  checks.push_back(symmetry);

  Check product{"product_formula", 1e-7};
  for (double lam : {-1.5, -0.5, 1.0, 2.0}) {
    const DunklExponential e(param, lam);
    for (auto [x, y] : pairs) {
      if (std::abs(lam) * (std::abs(x) + std::abs(y)) > 4.0) continue;
      const double ref = dunkl_kernel(param, lam, x) * dunkl_kernel(param, lam, y);
      product.observe(std::abs(tau(e, x, y) - ref) / std::abs(ref));
    }
  }
  checks.push_back(product);

  Check taylor{"taylor_exactness", 1e-10};
  for (int d = 0; d <= 8; ++d) {
    std::vector<double> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = std::cos(1.3 * i + d);
    const Polynomial poly(c);
    for (double x : {-3.0, -0.7, 0.2, 1.5, 3.0}) {
      for (double y : {-2.0, 0.0, 0.9, 3.0}) taylor.observe(std::abs(remainder_recursive(param, poly, d + 1, x, y)));
    }
  }
  checks.push_back(taylor);

  if (const Polynomial* poly = as_polynomial(f.level(0)); poly != nullptr && !poly->is_zero()) {
    Check own{"taylor_exactness_function", 1e-12};
    const int order = *poly->degree() + 1;
    for (double x : xs) {
      for (double y : {-2.0, 0.0, 0.9, 3.0}) own.observe(std::abs(remainder_recursive(param, *poly, order, x, y)));
    }
    checks.push_back(own);
  }

  Check commutation{"commutation", 1e-6};
  const std::vector<double> grid{-2.0, -0.7, 0.0, 0.3, 1.1, 2.4};
  for (double x : {0.5, -0.8}) commutation.observe(commutation_residual(f, x, grid, specs.kernel));
  checks.push_back(commutation);

  // alpha = -1/2 reduces to the classical shift, derivative and Taylor formula.
  Check classical{"classical_mode", 1e-9};
  const DunklParameter c = DunklParameter::classical();
  for (double x : {-1.5, 0.4, 2.0}) {
    const Polynomial shifted = translate_poly(c, kSextic, x);
    const Polynomial rem = remainder_poly(c, kSextic, 7, x);
    for (double y : {-1.0, 0.3, 1.7}) {
      classical.observe(relative(shifted(y), kSextic(x + y)));
      classical.observe(std::abs(rem(y)));
      classical.observe(relative(translate_numeric(c, f.level(0), x, y), f(x + y)));
    }
    classical.observe(relative(poly_dunkl(c, kSextic)(x), kSextic.derivative()(x)));
  }
  checks.push_back(classical);

  return finish_checks(base_report("operator-properties", config), checks);
}

// --- equivalence ---------------------------------------------------------------------

BesovIndex index_of(const ScenarioConfig& config, double beta, double q) {
  BesovIndex ix;
  ix.beta = beta;
  ix.p = config.p;
  ix.q = q;
  ix.k = config.k;
  ix.validate();
  return ix;
}

CommandResult equivalence(const ScenarioConfig& config) {
  const DunklParameter param = config.parameter();
  const TestFunction f = make_test_function(param, config.function, config.k);
  const std::vector<double> grid = config.grid.points();
  const EquivalenceReport r =
      equivalence_report(f, index_of(config, config.beta.front(), config.q.front()), grid, config.specs(), config.spread);
  Json report = base_report("equivalence", config);
  report["report"] = to_json(r);
  report["pass"] = r.passed();
  return {report, equivalence_csv(r), r.passed() ? kExitPass : kExitNumeric};
}

// --- besov -----------------------------------------------------------------------------

CommandResult besov(const ScenarioConfig& config) {
  constexpr double kStability = 0.02;
  constexpr int kPerOctave = 8;
  const DunklParameter param = config.parameter();
  const TestFunction f = make_test_function(param, config.function, config.k);
  const double lo = config.window_min;
  const double hi = config.window_max;
  // One table serves both the window and its doubling.
  std::vector<double> extra = log_grid(0.5 * lo, 2.0 * hi, kPerOctave);
  const std::vector<double> inner = log_grid(lo, hi, kPerOctave);
  extra.insert(extra.end(), inner.begin(), inner.end());
  const ModulusTable table(f, index_of(config, config.beta.front(), config.q.front()), 0.5 * lo, 2.0 * hi,
                           config.specs(), extra);

  Json results = Json::array();
  std::string csv = "beta,q,k,value,truncated,tail_low,tail_high,doubled_total,relative_change,pass\n";
  bool pass = true;
  for (double beta : config.beta) {
    for (double q : config.q) {
      const BesovIndex ix = index_of(config, beta, q);
      const SeminormResult a = besov_seminorm(table, ix, lo, hi, kPerOctave);
      const SeminormResult b = besov_seminorm(table, ix, 0.5 * lo, 2.0 * hi, kPerOctave);
      const double change = b.total() > 0.0 ? std::abs(a.total() - b.total()) / b.total() : 0.0;
      const bool ok = std::isfinite(a.value) && std::isfinite(b.value) && change <= kStability;
      pass = pass && ok;
      results.push_back({{"index", to_json(ix)},
                         {"seminorm", to_json(a)},
                         {"doubled", to_json(b)},
                         {"relative_change", json_number(change)},
                         {"pass", ok}});
      csv += format_real(beta) + ',' + format_real(q) + ',' + std::to_string(ix.k) + ',' + format_real(a.value) + ',' +
             format_real(a.truncated) + ',' + format_real(a.tail_low) + ',' + format_real(a.tail_high) + ',' +
             format_real(b.total()) + ',' + format_real(change) + ',' + (ok ? "true" : "false") + '\n';
    }
  }
  Json report = base_report("besov", config);
  report["omega_error"] = json_number(table.max_error());
  report["stability_limit"] = kStability;
  report["results"] = results;
  report["pass"] = pass;
  return {report, csv, pass ? kExitPass : kExitNumeric};
}

// --- catalog ---------------------------------------------------------------------------

CommandResult list_catalog(const ScenarioConfig& config) {
  Json entries = Json::array();
  std::string csv = "pattern,description\n";
  for (const CatalogEntry& e : catalog()) {
    entries.push_back({{"pattern", e.pattern}, {"description", e.description}});
    csv += '"' + e.pattern + "\",\"" + e.description + "\"\n";
  }
  Json report = base_report("catalog", config);
  report["catalog"] = entries;
  report["pass"] = true;
  return {report, csv, kExitPass};
}

using Handler = std::function<CommandResult(const ScenarioConfig&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"verify-identities", verify_identities},
      {"operator-properties", operator_properties},
      {"equivalence", equivalence},
      {"besov", besov},
      {"catalog", list_catalog},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run_command(const std::string& name, const ScenarioConfig& config) {
  config.validate();
  for (const auto& [n, handler] : handlers()) {
    if (n != name) continue;
    try {
      return handler(config);
    } catch (const NumericError& e) {
      Json report = base_report(name, config);
      report["errors"].push_back({{"kind", "numeric"}, {"message", e.what()}, {"residual", json_number(e.residual())}});
      report["pass"] = false;
      return {report, "", kExitNumeric};
    } catch (const std::out_of_range& e) {
      Json report = base_report(name, config);
      report["errors"].push_back({{"kind", "unsupported"}, {"message", e.what()}});
      report["pass"] = false;
      return {report, "", kExitNumeric};
    }
  }
  throw ConfigError("unknown command '" + name + "'");
}

std::string render(const CommandResult& result, const std::string& format) {
  if (format == "csv") {
    if (!result.csv.empty()) return result.csv;
    std::string out = "error\n";
    for (const auto& e : result.report["errors"]) out += '"' + e["message"].get<std::string>() + "\"\n";
    return out;
  }
  return result.report.dump(2) + "\n";
}

}  // namespace dunkl::lab

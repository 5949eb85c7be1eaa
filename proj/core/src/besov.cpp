#include "dunkl/besov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

bool level_is_zero(const TestFunction& f, int j) {
  const Decay d = f.level(j).decay();
  return d.kind == Decay::Kind::compact && d.scale == 0.0;
}

void check_window(double x_min, double x_max) {
  if (!(x_min > 0.0) || !(x_max > x_min) || !std::isfinite(x_max)) {
    throw std::invalid_argument("besov: window must satisfy 0 < x_min < x_max < inf");
  }
}

bool same_point(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

std::string format_anchor(double s) {
  std::ostringstream os;
  os.precision(6);
  os << "anchor:" << s;
  return os.str();
}

}  // namespace

void BesovIndex::validate() const {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must lie in [1, inf)");
  if (!(q >= 1.0)) throw std::invalid_argument("q must be >= 1 or inf");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

void ModulusSpec::validate() const {
  if (per_octave < 1) throw std::invalid_argument("modulus: per_octave must be >= 1");
  if (floor_octaves < 0) throw std::invalid_argument("modulus: floor_octaves must be >= 0");
}

void BesovSpecs::validate() const {
  kernel.validate();
  modulus.validate();
  if (theta0_nodes < 2) throw std::invalid_argument("besov: theta0_nodes must be >= 2");
}

std::vector<double> log_grid(double x_min, double x_max, int per_octave) {
  check_window(x_min, x_max);
  if (per_octave < 1) throw std::invalid_argument("log_grid: per_octave must be >= 1");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double x = x_min * std::exp2(static_cast<double>(i) / per_octave);
    if (x >= x_max || same_point(x, x_max)) break;
    out.push_back(x);
  }
  out.push_back(x_max);
  return out;
}

// --- modulus ---------------------------------------------------------------------

ModulusTable::ModulusTable(const TestFunction& f, const BesovIndex& index, double x_min, double x_max,
                           const BesovSpecs& specs, std::span<const double> extra)
    : x_max_(x_max) {
  index.validate();
  specs.validate();
  if (!(x_min > 0.0) || x_max < x_min || !std::isfinite(x_max)) {
    throw std::invalid_argument("modulus: need 0 < x_min <= x_max < inf");
  }
  if (f.param().is_classical()) throw std::invalid_argument("modulus: alpha = -1/2 is not supported");

  std::vector<double> radii;
  const double floor = x_min * std::exp2(-specs.modulus.floor_octaves);
  if (floor < x_max) radii = log_grid(floor, x_max, specs.modulus.per_octave);
  radii.push_back(x_max);
  for (double e : extra) {
    if (!(e > 0.0) || e > x_max * (1.0 + 1e-12)) throw std::invalid_argument("modulus: extra points must lie in (0, x_max]");
    radii.push_back(e);
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end(), same_point), radii.end());

  const TranslationKernel tau(f.param(), specs.kernel);
  auto norm_at = [&](double y) {
    const NormResult r = remainder_norm(f, index.k, y, index.p, tau, specs.quad);
    return Sample{y, r.value, r.error};
  };

  for (double sign : {1.0, -1.0}) {
    std::vector<Sample> side;
    side.reserve(radii.size());
    for (double r : radii) side.push_back(norm_at(sign * r));
    if (specs.modulus.refine) {
      // One parabolic step in ln|y| at each interior local maximum.
      std::vector<Sample> extra_samples;
      for (std::size_t i = 1; i + 1 < side.size(); ++i) {
        const double n0 = side[i - 1].norm, n1 = side[i].norm, n2 = side[i + 1].norm;
        if (!(n1 > n0 && n1 >= n2)) continue;
        const double u0 = std::log(std::abs(side[i - 1].y));
        const double u1 = std::log(std::abs(side[i].y));
        const double u2 = std::log(std::abs(side[i + 1].y));
        const double d01 = (n1 - n0) / (u1 - u0);
        const double d12 = (n2 - n1) / (u2 - u1);
        const double curv = (d12 - d01) / (u2 - u0);
        if (!(curv < 0.0)) continue;
        const double u = 0.5 * (u0 + u1) - d01 / (2.0 * curv);
        if (!(u > u0 && u < u2) || std::abs(u - u1) < 1e-9) continue;
        extra_samples.push_back(norm_at(sign * std::exp(u)));
      }
      side.insert(side.end(), extra_samples.begin(), extra_samples.end());
    }
    samples_.insert(samples_.end(), side.begin(), side.end());
  }

  std::stable_sort(samples_.begin(), samples_.end(),
                   [](const Sample& a, const Sample& b) { return std::abs(a.y) < std::abs(b.y); });
  double running = 0.0;
  for (const Sample& s : samples_) {
    running = std::max(running, s.norm);
    abs_y_.push_back(std::abs(s.y));
    prefix_max_.push_back(running);
    max_error_ = std::max(max_error_, s.error);
    prefix_error_.push_back(max_error_);
  }
}

double ModulusTable::omega(double x) const {
  if (!(x > 0.0)) throw std::invalid_argument("modulus: x must be > 0");
  if (x > x_max_ * (1.0 + 1e-12)) throw std::out_of_range("modulus: x exceeds the sampled range");
  const auto it = std::upper_bound(abs_y_.begin(), abs_y_.end(), x * (1.0 + 1e-12));
  if (it == abs_y_.begin()) return 0.0;
  return prefix_max_[static_cast<std::size_t>(it - abs_y_.begin()) - 1];
}

double ModulusTable::error_bound(double x) const {
  const auto it = std::upper_bound(abs_y_.begin(), abs_y_.end(), x * (1.0 + 1e-12));
  if (it == abs_y_.begin()) return 0.0;
  return prefix_error_[static_cast<std::size_t>(it - abs_y_.begin()) - 1];
}

double modulus(const TestFunction& f, const BesovIndex& index, double x, const BesovSpecs& specs) {
  return ModulusTable(f, index, x, x, specs).omega(x);
}

// --- K-functional ------------------------------------------------------------------

std::vector<KFunctionalBound> k_functional_upper(const TestFunction& f, const BesovIndex& index,
                                                 std::span<const double> x_grid, std::span<const double> anchors,
                                                 const BesovSpecs& specs) {
  index.validate();
  specs.validate();
  for (double x : x_grid) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("k_functional_upper: x must be > 0");
  }
  const int k = index.k;
  if (k - 1 > f.max_order()) throw std::out_of_range("k_functional_upper: Lambda^(k-1) f is not available");

  std::vector<KFunctionalBound> out(x_grid.size());
  if (level_is_zero(f, k - 1)) {
    for (KFunctionalBound& b : out) b.winner = "trivial";
    return out;
  }
  const double trivial = lp_norm(f, index.p, specs.quad, k - 1).value;
  for (KFunctionalBound& b : out) {
    b.value = trivial;
    b.winner = "trivial";
    b.n0 = trivial;
  }

  const TranslationKernel tau(f.param(), specs.kernel);
  const Theta0Rule rule(f.param(), specs.theta0_nodes);
  for (double s : anchors) {
    const Decomposition d = k_decomposition(f, k, s, index.p, tau, rule, specs.quad);
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
      const double v = d.n0 + x_grid[i] * d.n1;
      if (v < out[i].value) out[i] = {v, same_point(s, x_grid[i]) ? "matched" : format_anchor(s), s, d.n0, d.n1};
    }
  }
  return out;
}

KFunctionalBound k_functional_upper(const TestFunction& f, const BesovIndex& index, double x,
                                    const BesovSpecs& specs) {
  const double xs[1] = {x};
  return k_functional_upper(f, index, xs, xs, specs).front();
}

// --- seminorm ----------------------------------------------------------------------

SeminormResult besov_seminorm(const ModulusTable& table, const BesovIndex& index, double x_min, double x_max,
                              int per_octave) {
  index.validate();
  check_window(x_min, x_max);
  const std::vector<double> xs = log_grid(x_min, x_max, per_octave);
  const double s = index.beta + index.k - 1;
  SeminormResult out;
  out.x_min = x_min;
  out.x_max = x_max;
  out.samples = static_cast<int>(xs.size());

  std::vector<double> g(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) g[i] = table.omega(xs[i]) / std::pow(xs[i], s);

  if (index.q_infinite()) {
    // Below x_min the majorant c x^k gives omega / x^s ~ x^(1 - beta), above
    // x_max c x^(k-1) gives x^(-beta): both decrease away from the window.
    out.value = *std::max_element(g.begin(), g.end());
    out.truncated = out.value;
    return out;
  }

  const double q = index.q;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double h = std::log(xs[i + 1] / xs[i]);
    out.truncated += 0.5 * h * (std::pow(g[i], q) + std::pow(g[i + 1], q));
  }
  // int_0^{x_min} (g(x_min) (x / x_min)^(1 - beta))^q dx / x
  out.tail_low = std::pow(g.front(), q) / ((1.0 - index.beta) * q);
  // int_{x_max}^inf (g(x_max) (x_max / x)^beta)^q dx / x
  out.tail_high = std::pow(g.back(), q) / (index.beta * q);
  out.value = std::pow(out.total(), 1.0 / q);
  return out;
}

SeminormResult besov_seminorm(const TestFunction& f, const BesovIndex& index, double x_min, double x_max,
                              const BesovSpecs& specs) {
  check_window(x_min, x_max);
  const std::vector<double> xs = log_grid(x_min, x_max, 8);
  const ModulusTable table(f, index, x_min, x_max, specs, xs);
  return besov_seminorm(table, index, x_min, x_max, 8);
}

// --- equivalence ---------------------------------------------------------------------

EquivalenceReport equivalence_report(const TestFunction& f, const BesovIndex& index, std::span<const double> x_grid,
                                     const BesovSpecs& specs, double admissible_spread) {
  index.validate();
  if (x_grid.empty()) throw std::invalid_argument("equivalence_report: empty grid");
  if (!(x_grid.front() > 0.0)) throw std::invalid_argument("equivalence_report: grid must be positive");
  if (!std::is_sorted(x_grid.begin(), x_grid.end())) throw std::invalid_argument("equivalence_report: grid must be sorted");
  if (!(admissible_spread >= 1.0)) throw std::invalid_argument("equivalence_report: admissible spread must be >= 1");

  EquivalenceReport r;
  r.function = f.name();
  r.alpha = f.param().alpha();
  r.index = index;
  r.admissible_spread = admissible_spread;
  r.x_grid.assign(x_grid.begin(), x_grid.end());

  const ModulusTable table(f, index, x_grid.front(), x_grid.back(), specs, x_grid);
  const std::vector<KFunctionalBound> kb = k_functional_upper(f, index, x_grid, x_grid, specs);

  bool any = false;
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const double x = x_grid[i];
    const double w = table.omega(x);
    r.omega.push_back(w);
    r.omega_error.push_back(table.error_bound(x));
    r.k_upper.push_back(kb[i].value);
    r.k_winner.push_back(kb[i].winner);
    if (w > 0.0) {
      const double ratio = w / (std::pow(x, index.k - 1) * kb[i].value);
      r.ratio.push_back(ratio);
      r.c_low = any ? std::min(r.c_low, ratio) : ratio;
      r.c_high = any ? std::max(r.c_high, ratio) : ratio;
      any = true;
    } else {
      r.ratio.push_back(0.0);
    }
  }
  if (!any) {
    r.status = "degenerate";
  } else {
    const bool ok = std::isfinite(r.c_high) && r.c_low > 0.0 && r.spread() <= admissible_spread;
    r.status = ok ? "pass" : "fail";
  }
  return r;
}

}  // namespace dunkl

#include "dunkl/remainder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dunkl/theta.hpp"

namespace dunkl {

namespace {

void check_order(const TestFunction& f, int k, int needed) {
  if (k < 1) throw std::invalid_argument("remainder: k must be >= 1");
  if (needed > f.max_order()) {
    throw std::out_of_range("remainder: Lambda^" + std::to_string(needed) + " f is not available");
  }
}

// Lambda^k f = 0 makes R_k vanish for every x, whatever the decay of f.
bool vanishes(const TestFunction& f, int k) {
  if (k > f.max_order()) return false;
  const SmoothFunction& g = f.level(k);
  if (const auto* pg = dynamic_cast<const PolyGaussian*>(&g)) return pg->prefactor().is_zero();
  const Decay d = g.decay();
  return d.kind == Decay::Kind::compact && d.scale == 0.0;
}

void check_x(double x) {
  if (x == 0.0 || !std::isfinite(x)) throw std::invalid_argument("remainder: x must be nonzero and finite");
}

}  // namespace

Theta0Rule::Theta0Rule(const DunklParameter& param, int nodes)
    : param_(param), jacobi_(gauss_jacobi(nodes, 0.0, param.gamma())), legendre_(&gauss_legendre(nodes)) {
  if (param.is_classical()) throw std::invalid_argument("Theta0Rule: alpha = -1/2 has no Theta kernels");
}

std::vector<std::pair<double, double>> Theta0Rule::nodes(double x) const {
  check_x(x);
  const double X = std::abs(x);
  const double s = x > 0.0 ? 1.0 : -1.0;
  const double g = param_.gamma();
  std::vector<std::pair<double, double>> out;
  out.reserve(2 * (jacobi_.size() + legendre_->size()));
  // sgn(x) / (2 X^g) * (X/2)^(g+1) = sgn(x) X / 2^(g+2)
  const double cj = s * X / std::pow(2.0, g + 2.0);
  for (std::size_t i = 0; i < jacobi_.size(); ++i) {
    const double t = 0.5 * X * jacobi_.one_plus[i];
    out.emplace_back(t, cj * jacobi_.weights[i]);
    out.emplace_back(-t, cj * jacobi_.weights[i]);
  }
  const double cl = 0.25 * X;
  for (std::size_t i = 0; i < legendre_->size(); ++i) {
    const double t = 0.5 * X * legendre_->one_plus[i];
    out.emplace_back(t, cl * legendre_->weights[i]);
    out.emplace_back(-t, -cl * legendre_->weights[i]);
  }
  return out;
}

double Theta0Rule::integrate(double x, const std::function<double(double)>& h) const {
  double s = 0.0;
  for (const auto& [y, w] : nodes(x)) s += w * h(y);
  return s;
}

double theta0_monomial_moment(const DunklParameter& param, int p, double x) {
  if (p < 0) throw std::invalid_argument("theta0_monomial_moment: p must be >= 0");
  const double denom = p % 2 == 0 ? p + 1 + param.gamma() : p + 1;
  return std::pow(x, p + 1) / denom;
}

// --- R_k -----------------------------------------------------------------------

double remainder_recursive(const TestFunction& f, int k, double x, double a, const TranslationKernel& tau) {
  check_order(f, k, k - 1);
  double r = tau(f.level(0), x, a);
  for (int p = 0; p < k; ++p) r -= b_coeff(f.param(), p, x) * f.level(p)(a);
  return r;
}

Polynomial remainder_poly(const DunklParameter& param, const Polynomial& f, int k, double x) {
  if (k < 1) throw std::invalid_argument("remainder: k must be >= 1");
  Polynomial r = translate_poly(param, f, x);
  Polynomial level = f;
  for (int p = 0; p < k && !level.is_zero(); ++p) {
    r -= b_coeff(param, p, x) * level;
    level = poly_dunkl(param, level);
  }
  return r;
}

double remainder_recursive(const DunklParameter& param, const Polynomial& f, int k, double x, double a) {
  return remainder_poly(param, f, k, x)(a);
}

namespace {

QuadResult theta_weighted_integral(const DunklParameter& param, int k, double x,
                                   const std::function<double(double)>& h, const QuadratureSpec& q,
                                   std::vector<double> breaks, double width) {
  check_x(x);
  const ThetaKernel theta = theta_build(param, k - 1, x);
  const double X = std::abs(x);
  auto integrand = [&](double t) { return theta.weighted(t) * h(t) + theta.weighted(-t) * h(-t); };
  std::erase_if(breaks, [X](double b) { return !(b > 0.0 && b < X); });
  std::sort(breaks.begin(), breaks.end());
  QuadResult r = integrate(integrand, 0.0, X, q, breaks, width);
  if (!r.converged) throw NumericError("remainder_direct: quadrature missed tolerance", r.error);
  return r;
}

}  // namespace

QuadResult remainder_direct(const TestFunction& f, int k, double x, double a, const TranslationKernel& tau,
                            const QuadratureSpec& q) {
  check_order(f, k, k);
  const SmoothFunction& g = f.level(k);
  const Decay d = g.decay();
  std::vector<double> breaks;
  if (d.kind == Decay::Kind::compact) {
    // tau_y g(a) vanishes once ||y| - |a|| > R.
    breaks = {std::abs(a) - d.scale, std::abs(a) + d.scale};
  }
  return theta_weighted_integral(
      f.param(), k, x, [&](double y) { return tau(g, y, a); }, q, std::move(breaks), feature_width(d));
}

QuadResult remainder_direct(const DunklParameter& param, const Polynomial& f, int k, double x, double a,
                            const QuadratureSpec& q) {
  if (k < 1) throw std::invalid_argument("remainder: k must be >= 1");
  const Polynomial g = poly_dunkl_power(param, f, k);
  if (g.is_zero()) return {};
  return theta_weighted_integral(
      param, k, x, [&](double y) { return translate_poly(param, g, y)(a); }, q, {}, 0.0);
}

QuadResult remainder_convolution(const TestFunction& f, int k, double x, double a, const TranslationKernel& tau,
                                 const QuadratureSpec& q) {
  check_order(f, k, k);
  const SmoothFunction& g = f.level(1);
  std::vector<double> breaks;
  const Decay d = g.decay();
  if (d.kind == Decay::Kind::compact) breaks = {std::abs(a) - d.scale, std::abs(a) + d.scale};
  auto lower = [&](double y) {
    double r = tau(g, y, a);
    for (int j = 0; j < k - 1; ++j) r -= b_coeff(f.param(), j, y) * f.level(j + 1)(a);
    return r;
  };
  return theta_weighted_integral(f.param(), 1, x, lower, q, std::move(breaks), feature_width(d));
}

std::vector<Interval> remainder_support(const TestFunction& f, int k, double x, double p, const QuadratureSpec& q) {
  check_order(f, k, k - 1);
  if (!f.decay().integrable()) throw std::invalid_argument("remainder: f has no decay descriptor");
  std::vector<Interval> parts = translated_support(f.param(), f.decay(), x, p, q);
  for (int j = 0; j < k; ++j) {
    const double w = truncation_radius(f.level(j).decay(), f.param(), p, q);
    if (w > 0.0) parts.push_back({-w, w});
  }
  return merge_intervals(std::move(parts));
}

NormResult remainder_norm(const TestFunction& f, int k, double x, double p, const TranslationKernel& tau,
                          const QuadratureSpec& q) {
  if (vanishes(f, k)) return {};
  const std::vector<Interval> support = remainder_support(f, k, x, p, q);
  return lp_norm(
      f.param(), [&](double a) { return remainder_recursive(f, k, x, a, tau); }, support, p, q,
      feature_width(f.decay()));
}

// --- I_k -------------------------------------------------------------------------

Polynomial iterated_I_poly(const DunklParameter& param, const Polynomial& f, int k, double x) {
  if (k < 1) throw std::invalid_argument("iterated_I: k must be >= 1");
  Polynomial out;
  Polynomial level = f;
  for (int p = 0; !level.is_zero(); ++p) {
    // I_1 pairs b_p(y) = beta_p y^p with Theta_0; each further nesting
    // integrates the monomial y^(p+j) once more.
    double c = b_coeff(param, p, 1.0);
    for (int j = 0; j < k; ++j) c *= theta0_monomial_moment(param, p + j, 1.0);
    out += c * std::pow(x, p + k) * level;
    level = poly_dunkl(param, level);
  }
  return out;
}

double iterated_I(const TestFunction& f, int k, double x, double a, const TranslationKernel& tau,
                  const Theta0Rule& rule, int level) {
  if (k < 1) throw std::invalid_argument("iterated_I: k must be >= 1");
  if (k > kMaxNumericNesting) {
    throw std::out_of_range("iterated_I: numeric nesting is limited to depth " + std::to_string(kMaxNumericNesting));
  }
  check_x(x);
  const SmoothFunction& g = f.level(level);
  if (k == 1) return rule.integrate(x, [&](double y) { return tau(g, y, a); });
  return rule.integrate(x, [&](double y) { return iterated_I(f, k - 1, y, a, tau, rule, level); });
}

double dunkl_of_iterated_I(const TestFunction& f, int k, double x, double a, const TranslationKernel& tau,
                           const Theta0Rule& rule) {
  check_order(f, k, k - 1);
  const CallableFunction h([&](double s) { return iterated_I(f, k, x, s, tau, rule, k - 1); }, Decay::none(),
                           "I_k");
  return dunkl_apply(f.param(), h, a);
}

// --- decomposition -----------------------------------------------------------------

Decomposition k_decomposition(const TestFunction& f, int k, double x, double p, const TranslationKernel& tau,
                              const Theta0Rule& rule, const QuadratureSpec& q) {
  if (!(x > 0.0)) throw std::invalid_argument("k_decomposition: x must be > 0");
  check_order(f, k, k - 1);
  const DunklParameter& param = f.param();
  const double bk = b_coeff(param, k, x);
  Decomposition out;
  if (vanishes(f, k)) return out;

  const NormResult r = remainder_norm(f, k, x, p, tau, q);
  out.n1 = r.value / bk;
  out.error = r.error / bk;

  // int Theta_0(x, y) R_k(y, f)(a) A(y) dy on the fixed rule; the Taylor part
  // reduces to per-level constants sum_j w_j b_p(y_j).
  const std::vector<std::pair<double, double>> nodes = rule.nodes(x);
  std::vector<double> taylor(k, 0.0);
  for (int pp = 0; pp < k; ++pp) {
    for (const auto& [y, w] : nodes) taylor[pp] += w * b_coeff(param, pp, y);
  }
  const SmoothFunction& g = f.level(0);
  auto lam = [&](double a) {
    double s = 0.0;
    for (const auto& [y, w] : nodes) s += w * tau(g, y, a);
    for (int pp = 0; pp < k; ++pp) s -= taylor[pp] * f.level(pp)(a);
    return s / bk;
  };
  double w = 0.0;
  for (int j = 0; j < k; ++j) w = std::max(w, truncation_radius(f.level(j).decay(), param, p, q));
  const Interval support{-(x + w), x + w};
  const NormResult n0 = lp_norm(param, lam, std::span(&support, 1), p, q, feature_width(f.decay()));
  out.n0 = n0.value;
  out.error += n0.error;
  return out;
}

}  // namespace dunkl

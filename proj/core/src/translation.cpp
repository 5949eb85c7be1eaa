#include "dunkl/translation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dunkl {

void TranslationKernelSpec::validate() const {
  if (angular_nodes < 8) throw std::invalid_argument("TranslationKernelSpec: angular_nodes must be >= 8");
  if (!(tolerance > 0.0)) throw std::invalid_argument("TranslationKernelSpec: tolerance must be > 0");
  if (max_nodes < angular_nodes) throw std::invalid_argument("TranslationKernelSpec: max_nodes < angular_nodes");
  if (!(abs_tolerance >= 0.0)) throw std::invalid_argument("TranslationKernelSpec: abs_tolerance must be >= 0");
}

Polynomial translate_poly(const DunklParameter& param, const Polynomial& f, double x) {
  Polynomial out;
  const auto deg = f.degree();
  if (!deg) return out;
  Polynomial level = f;
  for (int p = 0; p <= *deg; ++p) {
    out += b_coeff(param, p, x) * level;
    level = poly_dunkl(param, level);
  }
  return out;
}

TranslationKernel::TranslationKernel(const DunklParameter& param, TranslationKernelSpec spec)
    : param_(param), spec_(spec) {
  spec_.validate();
  if (!param_.is_classical()) {
    const double a = param_.alpha();
    mass_ = std::exp((2.0 * a + 1.0) * std::log(2.0) + std::lgamma(a + 0.5) + std::lgamma(a + 1.5) -
                     std::lgamma(2.0 * a + 2.0));
  }
}

const TranslationKernel::Rules& TranslationKernel::rules(int n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = rules_.find(n);
  if (it != rules_.end()) return *it->second;
  const double a = param_.alpha() - 0.5;
  const double b = param_.alpha() + 0.5;
  auto r = std::make_unique<Rules>(Rules{gauss_jacobi(n, a, b), gauss_jacobi(n, 0.0, b), gauss_jacobi(n, a, 0.0)});
  return *rules_.emplace(n, std::move(r)).first->second;
}

double TranslationKernel::apply(int n, const SmoothFunction& f, double x, double y, double lo, double hi,
                                double* magnitude) const {
  const Rules& rs = rules(n);
  const double a = param_.alpha() - 0.5;
  const double b = param_.alpha() + 0.5;
  const double s = x + y;
  const double xy = x * y;
  const bool full = lo == -1.0 && hi == 1.0;
  const bool left = !full && lo == -1.0;
  const GaussRule& r = full ? rs.full : (left ? rs.left : rs.right);
  const double h = left ? 0.5 * (hi + 1.0) : 0.5 * (1.0 - lo);
  const double scale = full ? 1.0 / mass_ : std::pow(h, (left ? b : a) + 1.0) / mass_;
  double sum = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    double op = r.one_plus[i];
    double om = r.one_minus[i];
    double wt = r.weights[i] * scale;
    if (left) {
      op *= h;
      om = 2.0 - op;
      wt *= std::pow(om, a);
    } else if (!full) {
      om *= h;
      op = 2.0 - om;
      wt *= std::pow(op, b);
    }
    // Written as a sum of nonnegative parts so w^2 keeps full precision near 0.
    const double w2 = xy >= 0.0 ? (x - y) * (x - y) + 2.0 * xy * op : s * s - 2.0 * xy * om;
    const double w = std::sqrt(std::max(0.0, w2));
    const double g = f.even_part(w) + s * f.odd_quotient(w);
    sum += wt * g;
    mag += wt * std::abs(g);
  }
  if (magnitude) *magnitude = mag;
  return sum;
}

TranslationResult TranslationKernel::evaluate(const SmoothFunction& f, double x, double y) const {
  if (!std::isfinite(x) || !std::isfinite(y)) throw std::invalid_argument("translation: non-finite argument");
  if (param_.is_classical()) return {f(x + y), 0.0, 1};
  if (x == 0.0) return {f(y), 0.0, 1};
  if (y == 0.0) return {f(x), 0.0, 1};
  double lo = -1.0;
  double hi = 1.0;
  const Decay d = f.decay();
  if (d.kind == Decay::Kind::compact || d.kind == Decay::Kind::gaussian) {
    // Live range w <= R; 1 -+ t_c are formed directly to avoid cancellation.
    // Gaussian tails are cut at the truncation radius, which keeps the peak
    // near t = -1 resolved when x y is large.
    const double radius = d.kind == Decay::Kind::compact ? d.scale : truncation_radius(d, param_, 1.0);
    const double r2 = radius * radius;
    const double xy = x * y;
    if (xy > 0.0) {
      const double one_plus = (r2 - (x - y) * (x - y)) / (2.0 * xy);
      if (one_plus <= 0.0) return {0.0, 0.0, 0};
      if (one_plus < 2.0) hi = one_plus - 1.0;
    } else {
      const double one_minus = (r2 - (x + y) * (x + y)) / (-2.0 * xy);
      if (one_minus <= 0.0) return {0.0, 0.0, 0};
      if (one_minus < 2.0) lo = 1.0 - one_minus;
    }
  }
  int n = spec_.angular_nodes;
  double prev = apply(n / 2, f, x, y, lo, hi, nullptr);
  for (;;) {
    double mag = 0.0;
    const double q = apply(n, f, x, y, lo, hi, &mag);
    const double err = std::abs(q - prev);
    if (err <= std::max(spec_.tolerance * mag, spec_.abs_tolerance)) return {q, err, n};
    if (2 * n > spec_.max_nodes) {
      throw NumericError("translation: kernel quadrature missed tolerance at x=" + std::to_string(x) +
                             " y=" + std::to_string(y),
                         err);
    }
    prev = q;
    n *= 2;
  }
}

double translate_numeric(const DunklParameter& param, const SmoothFunction& f, double x, double y,
                         const TranslationKernelSpec& spec) {
  return TranslationKernel(param, spec)(f, x, y);
}

double translate_numeric(const TestFunction& f, double x, double y, const TranslationKernelSpec& spec) {
  return translate_numeric(f.param(), f.level(0), x, y, spec);
}

std::vector<Interval> translated_support(const DunklParameter& param, const Decay& decay, double x, double p,
                                         const QuadratureSpec& spec) {
  const double w = truncation_radius(decay, param, p, spec);
  if (w == 0.0) return {};
  const double ax = std::abs(x);
  const double lo = std::max(0.0, ax - w);
  return merge_intervals({{-(ax + w), -lo}, {lo, ax + w}});
}

double translation_contraction_check(const TestFunction& f, double x, double p, const QuadratureSpec& q,
                                     const TranslationKernelSpec& kernel) {
  const NormResult base = lp_norm(f, p, q);
  if (base.value == 0.0) return 0.0;
  if (x == 0.0) return 1.0;
  const TranslationKernel tau(f.param(), kernel);
  const SmoothFunction& g = f.level(0);
  const std::vector<Interval> support = translated_support(f.param(), f.decay(), x, p, q);
  const NormResult moved =
      lp_norm(f.param(), [&](double a) { return tau(g, x, a); }, support, p, q, feature_width(f.decay()));
  return moved.value / base.value;
}

double commutation_residual(const TestFunction& f, double x, const std::vector<double>& grid,
                            const TranslationKernelSpec& kernel) {
  if (f.max_order() < 1) throw std::out_of_range("commutation_residual: Lambda f is not available");
  if (x == 0.0) return 0.0;
  const TranslationKernel tau(f.param(), kernel);
  const SmoothFunction& g = f.level(0);
  const SmoothFunction& lg = f.level(1);
  const CallableFunction moved([&](double y) { return tau(g, x, y); }, Decay::none(), "tau_x f");
  double worst = 0.0;
  for (double y : grid) {
    const double lhs = dunkl_apply(f.param(), moved, y);
    const double rhs = tau(lg, x, y);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double commutation_residual(const DunklParameter& param, const Polynomial& f, double x,
                            const std::vector<double>& grid) {
  const Polynomial lhs = poly_dunkl(param, translate_poly(param, f, x));
  const Polynomial rhs = translate_poly(param, poly_dunkl(param, f), x);
  double worst = 0.0;
  for (double y : grid) worst = std::max(worst, std::abs(lhs(y) - rhs(y)));
  return worst;
}

}  // namespace dunkl

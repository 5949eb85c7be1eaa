#include "dunkl/test_function.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dunkl {

std::string Decay::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::none: os << "none"; break;
    case Kind::compact: os << "compact(R=" << scale << ")"; break;
    case Kind::gaussian: os << "gaussian(sigma=" << scale << ", degree=" << prefactor_degree << ")"; break;
    case Kind::polynomial: os << "polynomial(s=" << exponent << ")"; break;
  }
  return os.str();
}

double truncation_radius(const Decay& decay, const DunklParameter& param, double p,
                         const QuadratureSpec& spec) {
  switch (decay.kind) {
    case Decay::Kind::none:
      throw std::invalid_argument("function has no decay descriptor; not in L^p(mu_alpha)");
    case Decay::Kind::compact:
      return decay.scale;
    case Decay::Kind::gaussian: {
      // Push r until |x|^(gamma + p deg) exp(-p r^2/2) is as small as the bare
      // gaussian at the core radius.
      const double core = spec.gaussian_core;
      const double growth = param.gamma() + p * decay.prefactor_degree;
      double r = core;
      while (p * r * r / 2.0 - growth * std::log(r) < p * core * core / 2.0) r += 0.25;
      return decay.scale * r;
    }
    case Decay::Kind::polynomial: {
      const double excess = decay.exponent * p - param.gamma() - 1.0;
      if (!(excess > 0.0)) {
        throw std::invalid_argument("polynomial decay too slow for L^p(mu_alpha)");
      }
      return std::max(1.0, std::pow(spec.abs_tol * excess, -1.0 / excess));
    }
  }
  return 0.0;
}

double feature_width(const Decay& decay) {
  switch (decay.kind) {
    case Decay::Kind::compact: return decay.scale / 4.0;
    case Decay::Kind::gaussian: return decay.scale;
    default: return 0.0;
  }
}

double numeric_derivative(const std::function<double(double)>& f, double x) {
  const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(x));
  if (!(h > 0.0) || x + h == x) throw NumericError("numeric_derivative: step underflow");
  auto central = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
  const double d1 = central(h);
  const double d2 = central(0.5 * h);
  const double d = (4.0 * d2 - d1) / 3.0;
  if (!std::isfinite(d)) throw NumericError("numeric_derivative: non-finite result");
  return d;
}

double SmoothFunction::derivative(double x) const {
  return numeric_derivative([this](double t) { return (*this)(t); }, x);
}

double SmoothFunction::even_part(double w) const { return 0.5 * ((*this)(w) + (*this)(-w)); }

double SmoothFunction::odd_quotient(double w) const {
  if (std::abs(w) < 1e-6) return derivative(0.0);
  return ((*this)(w) - (*this)(-w)) / (2.0 * w);
}

SmoothPtr SmoothFunction::dunkl(const DunklParameter&) const { return nullptr; }

// --- PolyGaussian ----------------------------------------------------------

PolyGaussian::PolyGaussian(Polynomial p, double c)
    : p_(std::move(p)), c_(c), dp_(p_.derivative()), even_(p_.even_part()), oddq_(p_.odd_quotient()) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("PolyGaussian: rate must be >= 0");
}

double PolyGaussian::operator()(double x) const {
  return c_ == 0.0 ? p_(x) : p_(x) * std::exp(-c_ * x * x);
}

Decay PolyGaussian::decay() const {
  if (p_.is_zero()) return Decay::compact(0.0);
  if (c_ == 0.0) return Decay::none();
  return Decay::gaussian(1.0 / std::sqrt(2.0 * c_), *p_.degree());
}

std::string PolyGaussian::describe() const {
  std::ostringstream os;
  os.precision(12);
  os << "(" << p_.to_string() << ")";
  if (c_ != 0.0) os << "*exp(-" << c_ << "*x^2)";
  return os.str();
}

double PolyGaussian::derivative(double x) const {
  const double e = c_ == 0.0 ? 1.0 : std::exp(-c_ * x * x);
  return (dp_(x) - 2.0 * c_ * x * p_(x)) * e;
}

double PolyGaussian::even_part(double w) const {
  return c_ == 0.0 ? even_(w) : even_(w) * std::exp(-c_ * w * w);
}

double PolyGaussian::odd_quotient(double w) const {
  return c_ == 0.0 ? oddq_(w) : oddq_(w) * std::exp(-c_ * w * w);
}

SmoothPtr PolyGaussian::dunkl(const DunklParameter& param) const {
  // Lambda(P e) = (Lambda P - 2 c x P) e for the even factor e = exp(-c x^2).
  Polynomial next = poly_dunkl(param, p_) - Polynomial{0.0, 2.0 * c_} * p_;
  return std::make_shared<PolyGaussian>(std::move(next), c_);
}

// --- BumpFunction ----------------------------------------------------------

BumpFunction::BumpFunction(double radius) : BumpFunction(radius, Polynomial{1.0}, 0) {}

BumpFunction::BumpFunction(double radius, Polynomial numerator, int power)
    : radius_(radius),
      n_(std::move(numerator)),
      d_(power),
      dn_(n_.derivative()),
      even_(n_.even_part()),
      oddq_(n_.odd_quotient()) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("bump radius must be > 0");
  if (power < 0) throw std::invalid_argument("bump power must be >= 0");
}

double BumpFunction::envelope(double x, int power) const {
  const double r2 = radius_ * radius_;
  const double d = r2 - x * x;
  if (!(d > 0.0)) return 0.0;
  return std::exp(-r2 / d - power * std::log(d));
}

double BumpFunction::operator()(double x) const {
  const double e = envelope(x, d_);
  return e == 0.0 ? 0.0 : n_(x) * e;
}

std::string BumpFunction::describe() const {
  std::ostringstream os;
  os.precision(12);
  if (d_ == 0 && n_.coeffs() == std::vector<double>{1.0}) {
    os << "bump(" << radius_ << ")";
  } else {
    os << "(" << n_.to_string() << ")/(" << radius_ * radius_ << "-x^2)^" << d_ << "*bump(" << radius_ << ")";
  }
  return os.str();
}

double BumpFunction::derivative(double x) const {
  const double e = envelope(x, d_ + 2);
  if (e == 0.0) return 0.0;
  const double r2 = radius_ * radius_;
  const double dd = r2 - x * x;
  const double nx = n_(x);
  return (dn_(x) * dd * dd + 2.0 * d_ * x * nx * dd - 2.0 * r2 * x * nx) * e;
}

double BumpFunction::even_part(double w) const {
  const double e = envelope(w, d_);
  return e == 0.0 ? 0.0 : even_(w) * e;
}

double BumpFunction::odd_quotient(double w) const {
  const double e = envelope(w, d_);
  return e == 0.0 ? 0.0 : oddq_(w) * e;
}

SmoothPtr BumpFunction::dunkl(const DunklParameter& param) const {
  // For F = N D^-d b with D = R^2 - x^2 and b = exp(-R^2/D):
  //   Lambda F = [(Lambda N) D^2 + 2 d x N D - 2 R^2 x N] D^-(d+2) b.
  const double r2 = radius_ * radius_;
  const Polynomial dpoly{r2, 0.0, -1.0};
  const Polynomial x{0.0, 1.0};
  Polynomial next = poly_dunkl(param, n_) * (dpoly * dpoly) + (2.0 * d_) * (x * n_ * dpoly) -
                    (2.0 * r2) * (x * n_);
  return std::make_shared<BumpFunction>(radius_, std::move(next), d_ + 2);
}

// --- DunklExponential --------------------------------------------------------

DunklExponential::DunklExponential(DunklParameter param, double lam, double scale, BesselSeriesSpec spec)
    : param_(param), lam_(lam), scale_(scale), spec_(spec) {}

double DunklExponential::operator()(double x) const {
  return scale_ * dunkl_kernel(param_, lam_, x, spec_);
}

std::string DunklExponential::describe() const {
  std::ostringstream os;
  os << scale_ << "*E_alpha(" << lam_ << "*x)";
  return os.str();
}

double DunklExponential::derivative(double x) const {
  return scale_ * dunkl_kernel_derivative(param_, lam_, x, spec_);
}

double DunklExponential::even_part(double w) const {
  const double z = lam_ * w;
  if (param_.is_classical()) return scale_ * std::cosh(z);
  return scale_ * normalized_bessel_i(param_.alpha(), z, spec_);
}

double DunklExponential::odd_quotient(double w) const {
  const double z = lam_ * w;
  if (param_.is_classical()) return scale_ * (z == 0.0 ? lam_ : std::sinh(z) / w);
  return scale_ * lam_ / (2.0 * (param_.alpha() + 1.0)) * normalized_bessel_i(param_.alpha() + 1.0, z, spec_);
}

SmoothPtr DunklExponential::dunkl(const DunklParameter& param) const {
  if (param.alpha() != param_.alpha()) return nullptr;
  return std::make_shared<DunklExponential>(param_, lam_, scale_ * lam_, spec_);
}

// --- numeric fallbacks -------------------------------------------------------

CallableFunction::CallableFunction(std::function<double(double)> f, Decay decay, std::string name)
    : f_(std::move(f)), decay_(decay), name_(std::move(name)) {}

NumericDunkl::NumericDunkl(DunklParameter param, SmoothPtr inner) : param_(param), inner_(std::move(inner)) {}

double NumericDunkl::operator()(double x) const { return dunkl_apply(param_, *inner_, x); }

Decay NumericDunkl::decay() const {
  Decay d = inner_->decay();
  if (d.kind == Decay::Kind::gaussian) d.prefactor_degree += 1;
  return d;
}

std::string NumericDunkl::describe() const { return "Lambda[" + inner_->describe() + "]"; }

double dunkl_apply(const DunklParameter& param, const SmoothFunction& f, double x) {
  // odd_quotient carries the reflection part and its limit at the origin.
  return f.derivative(x) + param.gamma() * f.odd_quotient(x);
}

// --- TestFunction ------------------------------------------------------------

TestFunction::TestFunction(const DunklParameter& param, SmoothPtr base, int max_order) : param_(param) {
  if (!base) throw std::invalid_argument("TestFunction: null base function");
  if (max_order < 0) throw std::invalid_argument("TestFunction: max_order must be >= 0");
  levels_.push_back(std::move(base));
  numeric_.push_back(false);
  int numeric_levels = 0;
  for (int j = 1; j <= max_order; ++j) {
    SmoothPtr next = levels_.back()->dunkl(param_);
    bool numeric = false;
    if (!next) {
      if (++numeric_levels > kMaxNumericLevels) {
        throw std::invalid_argument("TestFunction: numeric fallback supports at most " +
                                    std::to_string(kMaxNumericLevels) + " Dunkl derivatives");
      }
      next = std::make_shared<NumericDunkl>(param_, levels_.back());
      numeric = true;
    }
    levels_.push_back(std::move(next));
    numeric_.push_back(numeric);
  }
}

const SmoothFunction& TestFunction::level(int j) const { return *level_ptr(j); }

SmoothPtr TestFunction::level_ptr(int j) const {
  if (j < 0 || j > max_order()) {
    throw std::out_of_range("Dunkl order " + std::to_string(j) + " exceeds available derivatives (max " +
                            std::to_string(max_order()) + ")");
  }
  return levels_[j];
}

bool TestFunction::is_numeric(int j) const {
  level_ptr(j);
  return numeric_[j];
}

double dunkl_power(const TestFunction& f, int k, double x) { return f.level(k)(x); }

double dunkl_power(const DunklParameter& param, const Polynomial& f, int k, double x) {
  return poly_dunkl_power(param, f, k)(x);
}

// --- norms -------------------------------------------------------------------

std::vector<Interval> merge_intervals(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return !(i.hi > i.lo); });
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const Interval& i : parts) {
    if (!out.empty() && i.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, i.hi);
    } else {
      out.push_back(i);
    }
  }
  return out;
}

NormResult lp_norm(const DunklParameter& param, const std::function<double(double)>& f,
                   std::span<const Interval> support, double p, const QuadratureSpec& spec, double feature) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("lp_norm: p must lie in [1, inf)");
  const double g = param.gamma();
  const double norm = param.measure_norm();
  auto integrand = [&](double a) {
    const double v = std::abs(f(a));
    if (v == 0.0) return 0.0;
    const double vp = p == 1.0 ? v : (p == 2.0 ? v * v : std::pow(v, p));
    return g == 0.0 ? vp / norm : vp * std::pow(std::abs(a), g) / norm;
  };
  double total = 0.0;
  double err = 0.0;
  for (const Interval& iv : support) {
    if (!(iv.hi > iv.lo)) continue;
    std::vector<double> breaks;
    if (iv.lo < 0.0 && iv.hi > 0.0) breaks.push_back(0.0);
    const double width = feature > 0.0 ? feature : (iv.hi - iv.lo) / 16.0;
    QuadResult r = integrate(integrand, iv.lo, iv.hi, spec, breaks, width);
    if (!r.converged) {
      throw NumericError("lp_norm: quadrature missed tolerance (error " + std::to_string(r.error) + ")",
                         r.error);
    }
    total += r.value;
    err += r.error;
  }
  NormResult out;
  if (total <= 0.0) return out;
  out.value = std::pow(total, 1.0 / p);
  out.error = out.value / (p * total) * err;
  return out;
}

NormResult lp_norm(const TestFunction& f, double p, const QuadratureSpec& spec, int order) {
  const SmoothFunction& g = f.level(order);
  const Decay d = g.decay();
  const double r = truncation_radius(d, f.param(), p, spec);
  if (r == 0.0) return {};
  const Interval iv{-r, r};
  return lp_norm(f.param(), [&g](double x) { return g(x); }, std::span(&iv, 1), p, spec, feature_width(d));
}

bool decay_is_honest(const SmoothFunction& f) {
  const Decay d = f.decay();
  switch (d.kind) {
    case Decay::Kind::none:
      return true;
    case Decay::Kind::compact: {
      for (int i = 0; i <= 64; ++i) {
        const double x = d.scale * (1.0 + i / 64.0);
        if (f(x) != 0.0 || f(-x) != 0.0) return false;
      }
      return true;
    }
    case Decay::Kind::gaussian:
    case Decay::Kind::polynomial: {
      auto shape = [&](double x) {
        const double ax = std::abs(x);
        if (d.kind == Decay::Kind::polynomial) return std::pow(1.0 + ax, -d.exponent);
        return std::pow(1.0 + ax, d.prefactor_degree) * std::exp(-0.5 * ax * ax / (d.scale * d.scale));
      };
      const double outer = d.kind == Decay::Kind::gaussian ? 8.0 * d.scale : 64.0;
      double inner_max = 0.0;
      double outer_max = 0.0;
      for (int i = 0; i <= 256; ++i) {
        const double x = outer * i / 256.0;
        const double r = std::max(std::abs(f(x)), std::abs(f(-x))) / shape(x);
        double& slot = x <= outer / 2.0 ? inner_max : outer_max;
        slot = std::max(slot, r);
      }
      return outer_max <= 10.0 * inner_max + 1e-300;
    }
  }
  return false;
}

// --- catalog -----------------------------------------------------------------

std::vector<CatalogEntry> catalog() {
  return {
      {"gaussian(sigma)", "exp(-x^2 / (2 sigma^2)); Schwartz class, closed-form Dunkl derivatives"},
      {"bump(R)", "exp(-R^2 / (R^2 - x^2)) on |x| < R; compactly supported, closed-form Dunkl derivatives"},
      {"poly(c0,...,cn)", "c0 + c1 x + ... + cn x^n; exact Dunkl calculus, no decay"},
      {"hermite-like(n,sigma)", "x^n exp(-x^2 / (2 sigma^2)); mixed parity for odd n"},
      {"zero", "the zero function"},
  };
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<double> parse_args(const std::string& spec, const std::string& body) {
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || !std::isfinite(v)) {
      throw std::invalid_argument("malformed argument '" + item + "' in function '" + spec + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

SmoothPtr make_catalog_function(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec == "zero") return std::make_shared<PolyGaussian>(Polynomial{}, 0.0);
  const auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') {
    throw std::invalid_argument("unknown test function '" + spec + "' (try the catalog command)");
  }
  const std::string name = trim(spec.substr(0, open));
  const std::vector<double> args = parse_args(spec, spec.substr(open + 1, spec.size() - open - 2));
  auto expect = [&](std::size_t n) {
    if (args.size() != n) {
      throw std::invalid_argument("function '" + name + "' expects " + std::to_string(n) + " argument(s)");
    }
  };
  if (name == "gaussian") {
    expect(1);
    if (!(args[0] > 0.0)) throw std::invalid_argument("gaussian sigma must be > 0");
    return std::make_shared<PolyGaussian>(Polynomial{1.0}, 0.5 / (args[0] * args[0]));
  }
  if (name == "bump") {
    expect(1);
    return std::make_shared<BumpFunction>(args[0]);
  }
  if (name == "poly") {
    if (args.empty()) throw std::invalid_argument("poly expects at least one coefficient");
    return std::make_shared<PolyGaussian>(Polynomial(args), 0.0);
  }
  if (name == "hermite-like") {
    expect(2);
    const double n = args[0];
    if (n < 0.0 || n != std::floor(n) || n > 32.0) {
      throw std::invalid_argument("hermite-like degree must be an integer in [0, 32]");
    }
    if (!(args[1] > 0.0)) throw std::invalid_argument("hermite-like sigma must be > 0");
    return std::make_shared<PolyGaussian>(Polynomial::monomial(static_cast<int>(n)), 0.5 / (args[1] * args[1]));
  }
  throw std::invalid_argument("unknown test function '" + name + "' (try the catalog command)");
}

TestFunction make_test_function(const DunklParameter& param, const std::string& spec, int max_order) {
  return TestFunction(param, make_catalog_function(spec), max_order);
}

}  // namespace dunkl

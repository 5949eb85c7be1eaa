#include "dunkl/special_functions.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

namespace dunkl {

namespace {

double norm_for(double alpha) { return std::pow(2.0, alpha + 1.0) * std::tgamma(alpha + 1.0); }

Rational reduce(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

}  // namespace

DunklParameter::DunklParameter(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha <= -0.5) {
    throw std::invalid_argument("alpha must exceed -1/2 (got " + std::to_string(alpha) + ")");
  }
  measure_norm_ = norm_for(alpha);
}

DunklParameter DunklParameter::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("alpha denominator must be nonzero");
  DunklParameter p(static_cast<double>(num) / static_cast<double>(den));
  const Rational a = reduce(num, den);
  p.exact_gamma_ = reduce(2 * a.num + a.den, a.den);
  return p;
}

DunklParameter DunklParameter::parse(const std::string& text) {
  // Plain decimals are kept exact; anything else goes through stod.
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool digits = false;
  bool point = false;
  bool exact = true;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
      if (num > 100000000000LL || den > 100000000000LL) {
        exact = false;
        break;
      }
      num = num * 10 + (c - '0');
      if (point) den *= 10;
    } else if (c == '.' && !point) {
      point = true;
    } else {
      exact = false;
      break;
    }
  }
  if (exact && digits) return rational(negative ? -num : num, den);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("alpha is not a number: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("alpha is not a number: '" + text + "'");
  return DunklParameter(value);
}

DunklParameter DunklParameter::classical() {
  DunklParameter p;
  p.alpha_ = -0.5;
  p.measure_norm_ = norm_for(-0.5);
  p.classical_ = true;
  p.exact_gamma_ = Rational{0, 1};
  return p;
}

void BesselSeriesSpec::validate() const {
  if (max_terms < 1) throw std::invalid_argument("BesselSeriesSpec.max_terms must be >= 1");
  if (!(tail_tolerance > 0.0)) throw std::invalid_argument("BesselSeriesSpec.tail_tolerance must be > 0");
}

double pochhammer(double a, int m) {
  if (m < 0) throw std::invalid_argument("pochhammer: m must be nonnegative");
  double r = 1.0;
  for (int j = 0; j < m; ++j) r *= a + j;
  return r;
}

double gamma_fn(double x) { return std::tgamma(x); }

double normalized_bessel_i(double order, double t, const BesselSeriesSpec& spec) {
  spec.validate();
  if (!(order > -1.0)) throw std::invalid_argument("normalized_bessel_i: order must exceed -1");
  const double q = 0.25 * t * t;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n <= spec.max_terms; ++n) {
    term *= q / (n * (order + n));
    sum += term;
    if (term < spec.tail_tolerance) return sum;
  }
  throw NumericError("normalized_bessel_i: series did not converge", term);
}

double normalized_bessel_i_derivative(double order, double t, const BesselSeriesSpec& spec) {
  spec.validate();
  if (!(order > -1.0)) throw std::invalid_argument("normalized_bessel_i: order must exceed -1");
  // term_n = q^n / (n! (a+1)_n), d/dt term_n = 2n term_n / t = n q^(n-1) t / (2 n! (a+1)_n)
  const double q = 0.25 * t * t;
  double base = 0.5 * t / (order + 1.0);  // derivative of the n = 1 term
  double sum = base;
  for (int n = 2; n <= spec.max_terms; ++n) {
    base *= q / ((n - 1) * (order + n));
    sum += base;
    if (std::abs(base) < spec.tail_tolerance) return sum;
  }
  throw NumericError("normalized_bessel_i_derivative: series did not converge", base);
}

double dunkl_kernel(const DunklParameter& param, double lam, double x, const BesselSeriesSpec& spec) {
  const double z = lam * x;
  if (param.is_classical()) return std::exp(z);
  const double a = param.alpha();
  return normalized_bessel_i(a, z, spec) + z / (2.0 * (a + 1.0)) * normalized_bessel_i(a + 1.0, z, spec);
}

double dunkl_kernel_derivative(const DunklParameter& param, double lam, double x,
                               const BesselSeriesSpec& spec) {
  const double z = lam * x;
  if (param.is_classical()) return lam * std::exp(z);
  const double a = param.alpha();
  const double c = 1.0 / (2.0 * (a + 1.0));
  const double dz = normalized_bessel_i_derivative(a, z, spec) +
                    c * (normalized_bessel_i(a + 1.0, z, spec) +
                         z * normalized_bessel_i_derivative(a + 1.0, z, spec));
  return lam * dz;
}

double weight_A(const DunklParameter& param, double x) {
  const double g = param.gamma();
  if (g == 0.0) return 1.0;
  return std::pow(std::abs(x), g);
}

double measure_density(const DunklParameter& param, double x) {
  return weight_A(param, x) / param.measure_norm();
}

double b_coeff(const DunklParameter& param, int p, double x) {
  if (p < 0) throw std::invalid_argument("b_coeff: p must be nonnegative");
  const int m = p / 2;
  const double a1 = param.alpha() + 1.0;
  double denom = pochhammer(a1, p % 2 == 0 ? m : m + 1);
  for (int j = 2; j <= m; ++j) denom *= j;
  double h = 1.0;
  for (int j = 0; j < p; ++j) h *= 0.5 * x;
  return h / denom;
}

}  // namespace dunkl

#pragma once

// Scalar ingredients of the rank-one Dunkl calculus: the index alpha, the
// weight A_alpha(x) = |x|^(2 alpha + 1), normalized Bessel series, the Dunkl
// kernel at real arguments and the Taylor coefficients b_p.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dunkl {

/// Thrown when a series or quadrature cannot reach its requested accuracy.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what, double residual = 0.0)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Exact value of 2 alpha + 1 as a reduced fraction, when alpha is rational.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// The Dunkl index alpha > -1/2 together with the measure normalization
/// 2^(alpha+1) Gamma(alpha+1).
///
/// alpha = -1/2 is admitted only through classical(), a flagged oracle mode in
/// which the operator is d/dx and translation is the ordinary shift.
class DunklParameter {
 public:
  explicit DunklParameter(double alpha);

  /// alpha = num/den with the exact value kept for exponent comparisons.
  static DunklParameter rational(std::int64_t num, std::int64_t den);

  /// Parses a decimal literal ("0.5", "-0.25", "3") keeping it exact.
  static DunklParameter parse(const std::string& text);

  static DunklParameter classical();

  double alpha() const noexcept { return alpha_; }
  /// 2 alpha + 1, the exponent of the weight.
  double gamma() const noexcept { return 2.0 * alpha_ + 1.0; }
  double measure_norm() const noexcept { return measure_norm_; }
  bool is_classical() const noexcept { return classical_; }
  const std::optional<Rational>& exact_gamma() const noexcept { return exact_gamma_; }

 private:
  DunklParameter() = default;

  double alpha_ = 0.0;
  double measure_norm_ = 1.0;
  bool classical_ = false;
  std::optional<Rational> exact_gamma_;
};

struct BesselSeriesSpec {
  int max_terms = 200;
  double tail_tolerance = 1e-15;

  void validate() const;
};

/// Rising factorial a (a+1) ... (a+m-1); 1 for m = 0.
double pochhammer(double a, int m);

double gamma_fn(double x);

/// j_a(i t) = sum_n (t/2)^(2n) / (n! (a+1)_n), the normalized modified Bessel
/// series (j_a(0) = 1). Throws NumericError when the tail does not drop below
/// spec.tail_tolerance (relative to the partial sum) within spec.max_terms.
double normalized_bessel_i(double order, double t, const BesselSeriesSpec& spec = {});

/// d/dt of normalized_bessel_i, summed term by term.
double normalized_bessel_i_derivative(double order, double t,
                                      const BesselSeriesSpec& spec = {});

/// E_alpha(lam x) = j_alpha(i lam x) + lam x / (2(alpha+1)) j_{alpha+1}(i lam x).
double dunkl_kernel(const DunklParameter& param, double lam, double x,
                    const BesselSeriesSpec& spec = {});

/// d/dx E_alpha(lam x), from the term-wise differentiated series.
double dunkl_kernel_derivative(const DunklParameter& param, double lam, double x,
                               const BesselSeriesSpec& spec = {});

/// A_alpha(x) = |x|^(2 alpha + 1).
double weight_A(const DunklParameter& param, double x);

/// Density of mu_alpha with respect to dx.
double measure_density(const DunklParameter& param, double x);

/// Taylor coefficient b_p(x):
///   b_{2m}(x)   = (x/2)^(2m)   / ((alpha+1)_m m!)
///   b_{2m+1}(x) = (x/2)^(2m+1) / ((alpha+1)_{m+1} m!)
double b_coeff(const DunklParameter& param, int p, double x);

}  // namespace dunkl

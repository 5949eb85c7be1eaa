#pragma once

// Exact construction of the Taylor-remainder kernels u_k, v_k and
// Theta_k = u_k + v_k as finite sums of power-log terms c t^e (ln t)^m.
//
//   u_0(x, y) = sgn(x) / (2 A(x))      v_0(x, y) = sgn(y) / (2 A(y))
//   u_k(x, y) = int_{|y|}^{|x|} v_{k-1}(x, z) dz
//   v_k(x, y) = sgn(y) / A(y) int_{|y|}^{|x|} u_{k-1}(x, z) A(z) dz
//
// Every exponent has the form n + j (2 alpha + 1) with integers n, j, which
// is what makes exact detection of the e = -1 (logarithmic) case possible.

#include <string>
#include <vector>

#include "dunkl/quadrature.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

/// shift + gamma_mult * (2 alpha + 1).
struct Exponent {
  int shift = 0;
  int gamma_mult = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

struct PowerLogTerm {
  double coeff = 0.0;
  Exponent exponent;
  /// Numeric value of the exponent for the owning alpha.
  double e = 0.0;
  int log_power = 0;
};

enum class Parity { even, sgn_odd };

/// Sum of PowerLogTerms in t = |y|; the value at y is S(|y|) (even) or
/// sgn(y) S(|y|) (sgn_odd). Terms with equal (e, m) are merged on insertion.
class TermSum {
 public:
  TermSum(const DunklParameter& param, Parity parity, double x_anchor);

  void add(double coeff, Exponent exponent, int log_power);

  /// S(t) for t > 0, parity not applied.
  double magnitude(double t) const;
  /// Parity-applied value; requires 0 < |y| <= |x_anchor|.
  double operator()(double y) const;

  /// Multiplies every term by t^(power * (2 alpha + 1)).
  TermSum times_weight(int power) const;
  TermSum with_parity(Parity parity) const;

  Parity parity() const noexcept { return parity_; }
  double x_anchor() const noexcept { return x_anchor_; }
  const std::vector<PowerLogTerm>& terms() const noexcept { return terms_; }
  const DunklParameter& param() const noexcept { return param_; }

  /// True when the two exponents coincide: exactly for rational alpha,
  /// within 1e-12 otherwise.
  bool same_exponent(const Exponent& a, const Exponent& b) const;
  double exponent_value(const Exponent& e) const;

  /// One "coeff e m parity" row per term.
  std::string to_report() const;

 private:
  DunklParameter param_;
  Parity parity_;
  double x_anchor_;
  std::vector<PowerLogTerm> terms_;
};

/// t -> int_t^X S(z) dz as a TermSum (even parity, constants as e = 0, m = 0).
TermSum term_integrate(const TermSum& s, double upper);

/// Theta_k(x, .) kept as its even part u and its sgn-odd part v.
struct ThetaKernel {
  TermSum u;
  TermSum v;
  /// u A and v A, kept so that Theta A never forms |y|^-gamma.
  TermSum u_weighted;
  TermSum v_weighted;
  int order = 0;

  double operator()(double y) const { return u(y) + v(y); }
  /// Theta_k(x, y) A(y).
  double weighted(double y) const;
};

/// u_k, v_k for the fixed outer argument x != 0.
ThetaKernel theta_build(const DunklParameter& param, int k, double x);

double theta_eval(const TermSum& s, double y);
double theta_eval(const ThetaKernel& theta, double y);

/// int_{-|x|}^{|x|} |Theta_{k-1}(x, y)| A(y) dy, k >= 1. The sign changes of
/// Theta are located first so every panel has a smooth integrand.
QuadResult theta_abs_integral(const DunklParameter& param, int k, double x, const QuadratureSpec& spec = {});

/// b_k(|x|) + |x| b_{k-1}(|x|), the bound on theta_abs_integral.
double theta_abs_bound(const DunklParameter& param, int k, double x);

struct MomentResult {
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  double quad_error = 0.0;
};

/// int_{-|x|}^{|x|} Theta_0(x, y) b_p(y) A(y) dy, reported against b_{p+1}(x).
MomentResult theta_moment(const DunklParameter& param, int p, double x, const QuadratureSpec& spec = {});

}  // namespace dunkl

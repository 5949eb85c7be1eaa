#pragma once

// Integral remainder R_k of the Dunkl-Taylor formula, the iterated integrals
// I_k and the two-piece decomposition f = f_0 + f_1 behind the K-functional
// bound.
//
//   recursive:  R_k(x, f)(a) = tau_x f(a) - sum_{p<k} b_p(x) Lambda^p f(a)
//   direct:     R_k(x, f)(a) = int Theta_{k-1}(x, y) tau_y(Lambda^k f)(a) A(y) dy
//   I_1(x, f)(a) = int Theta_0(x, y) tau_y f(a) A(y) dy
//   I_k(x, f)(a) = int Theta_0(x, y) I_{k-1}(y, f)(a) A(y) dy

#include <functional>
#include <utility>
#include <vector>

#include "dunkl/polynomial.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/special_functions.hpp"
#include "dunkl/test_function.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

enum class RemainderRoute { direct, recursive };

/// Fixed rule for int_{-|x|}^{|x|} Theta_0(x, y) h(y) A(y) dy. Theta_0 A is
/// sgn(x) |y|^g / (2 |x|^g) + sgn(y) / 2, so the first part takes a
/// Gauss-Jacobi rule with weight t^g and the second a Gauss-Legendre rule.
class Theta0Rule {
 public:
  Theta0Rule(const DunklParameter& param, int nodes = 32);

  /// (y, weight) pairs for the outer argument x.
  std::vector<std::pair<double, double>> nodes(double x) const;
  double integrate(double x, const std::function<double(double)>& h) const;

 private:
  DunklParameter param_;
  GaussRule jacobi_;
  const GaussRule* legendre_;
};

/// int_{-|x|}^{|x|} Theta_0(x, y) y^p A(y) dy, exact.
double theta0_monomial_moment(const DunklParameter& param, int p, double x);

// --- R_k ---------------------------------------------------------------------

double remainder_recursive(const TestFunction& f, int k, double x, double a, const TranslationKernel& tau);
/// Exact: tau_x f - sum_{p<k} b_p(x) Lambda^p f as a polynomial in a.
Polynomial remainder_poly(const DunklParameter& param, const Polynomial& f, int k, double x);
double remainder_recursive(const DunklParameter& param, const Polynomial& f, int k, double x, double a);

QuadResult remainder_direct(const TestFunction& f, int k, double x, double a, const TranslationKernel& tau,
                            const QuadratureSpec& q = {});
QuadResult remainder_direct(const DunklParameter& param, const Polynomial& f, int k, double x, double a,
                            const QuadratureSpec& q = {});

/// int Theta_0(x, y) R_{k-1}(y, Lambda f)(a) A(y) dy with R_0(y, g) = tau_y g;
/// equals R_k(x, f)(a).
QuadResult remainder_convolution(const TestFunction& f, int k, double x, double a, const TranslationKernel& tau,
                                 const QuadratureSpec& q = {});

/// Interval set in a outside which R_k(x, f) is negligible for L^p.
std::vector<Interval> remainder_support(const TestFunction& f, int k, double x, double p,
                                        const QuadratureSpec& q = {});

/// ||R_k(x, f)||_{p,alpha} via the recursive route.
NormResult remainder_norm(const TestFunction& f, int k, double x, double p, const TranslationKernel& tau,
                          const QuadratureSpec& q = {});

// --- I_k ---------------------------------------------------------------------

/// Deepest nesting offered by the numeric I_k route.
inline constexpr int kMaxNumericNesting = 3;

/// I_k(x, f) as a polynomial in a, built from exact Theta_0 moments of
/// monomials: I_k = sum_p C_{k,p} x^{p+k} Lambda^p f.
Polynomial iterated_I_poly(const DunklParameter& param, const Polynomial& f, int k, double x);

/// I_k(x, Lambda^level f)(a) by nested fixed rules. Throws std::out_of_range
/// for k > kMaxNumericNesting.
double iterated_I(const TestFunction& f, int k, double x, double a, const TranslationKernel& tau,
                  const Theta0Rule& rule, int level = 0);

/// Lambda^k I_k(x, f)(a) as Lambda applied by finite differences to
/// I_k(x, Lambda^{k-1} f), using Lambda I_k(x, g) = I_k(x, Lambda g) for the
/// remaining k - 1 orders.
double dunkl_of_iterated_I(const TestFunction& f, int k, double x, double a, const TranslationKernel& tau,
                           const Theta0Rule& rule);

// --- decomposition -------------------------------------------------------------

struct Decomposition {
  /// ||Lambda^{k-1} f_0||, f_0 = f - I_k(x, f) / b_k(x).
  double n0 = 0.0;
  /// ||Lambda^k f_1|| = ||R_k(x, f)|| / b_k(x).
  double n1 = 0.0;
  double error = 0.0;
};

/// Both norms from closed expressions:
///   Lambda^k f_1 = R_k(x, f) / b_k(x),
///   Lambda^{k-1} f_0 = -(1 / b_k(x)) int Theta_0(x, y) R_k(y, f) A(y) dy.
Decomposition k_decomposition(const TestFunction& f, int k, double x, double p, const TranslationKernel& tau,
                              const Theta0Rule& rule, const QuadratureSpec& q = {});

}  // namespace dunkl

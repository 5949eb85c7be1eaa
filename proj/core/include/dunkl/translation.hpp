#pragma once

// Dunkl translation tau_x. Polynomials go through the terminating Taylor sum
// tau_x f = sum_p b_p(x) Lambda^p f; everything else through the rank-one
// product-formula kernel
//
//   tau_x f(y) = int_{-1}^{1} [ f_e(w) + (x + y) f_o(w) / w ] dnu(t),
//   w = sqrt(x^2 + y^2 + 2 x y t),
//   dnu(t) proportional to (1 + t) (1 - t^2)^(alpha - 1/2) dt, total mass 1,
//
// with f_e, f_o the even and odd parts of f. For compact or gaussian decay the
// t-range is cut where w crosses the support (or truncation) radius and only the live piece
// is integrated, with the Jacobi endpoint weight kept on the side(s) that
// touch t = +-1.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "dunkl/polynomial.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/special_functions.hpp"
#include "dunkl/test_function.hpp"

namespace dunkl {

struct TranslationKernelSpec {
  /// Starting node count in t; doubled until the tolerance is met.
  int angular_nodes = 64;
  /// Accepted |Q_n - Q_{n/2}| relative to the integrand's magnitude.
  double tolerance = 1e-10;
  int max_nodes = 1024;
  /// Absolute floor for the same test, for translates that are numerically zero.
  double abs_tolerance = 1e-15;

  void validate() const;
};

struct TranslationResult {
  double value = 0.0;
  double error = 0.0;
  int nodes = 0;
};

/// Exact polynomial a -> sum_{p <= deg f} b_p(x) (Lambda^p f)(a).
Polynomial translate_poly(const DunklParameter& param, const Polynomial& f, double x);

/// Holds the normalized Gauss-Jacobi rules for one alpha. Safe to share.
class TranslationKernel {
 public:
  explicit TranslationKernel(const DunklParameter& param, TranslationKernelSpec spec = {});

  /// tau_x f(y). Throws NumericError when max_nodes cannot meet the tolerance.
  TranslationResult evaluate(const SmoothFunction& f, double x, double y) const;
  double operator()(const SmoothFunction& f, double x, double y) const { return evaluate(f, x, y).value; }

  const DunklParameter& param() const noexcept { return param_; }
  const TranslationKernelSpec& spec() const noexcept { return spec_; }

 private:
  struct Rules {
    GaussRule full;
    GaussRule left;
    GaussRule right;
  };
  const Rules& rules(int n) const;
  double apply(int n, const SmoothFunction& f, double x, double y, double lo, double hi, double* magnitude) const;

  DunklParameter param_;
  TranslationKernelSpec spec_;
  mutable std::mutex mutex_;
  double mass_ = 1.0;
  mutable std::map<int, std::unique_ptr<Rules>> rules_;
};

double translate_numeric(const DunklParameter& param, const SmoothFunction& f, double x, double y,
                         const TranslationKernelSpec& spec = {});
double translate_numeric(const TestFunction& f, double x, double y, const TranslationKernelSpec& spec = {});

/// Support of a -> tau_x f(a) implied by the decay of f: the set
/// ||a| - |x|| <= W for the truncation radius W of f.
std::vector<Interval> translated_support(const DunklParameter& param, const Decay& decay, double x, double p,
                                         const QuadratureSpec& spec = {});

/// ||tau_x f||_{p,alpha} / ||f||_{p,alpha}; 0 when ||f|| = 0.
double translation_contraction_check(const TestFunction& f, double x, double p, const QuadratureSpec& q = {},
                                     const TranslationKernelSpec& kernel = {});

/// max over the grid of |Lambda(tau_x f)(y) - tau_x(Lambda f)(y)|.
double commutation_residual(const TestFunction& f, double x, const std::vector<double>& grid,
                            const TranslationKernelSpec& kernel = {});
double commutation_residual(const DunklParameter& param, const Polynomial& f, double x,
                            const std::vector<double>& grid);

}  // namespace dunkl

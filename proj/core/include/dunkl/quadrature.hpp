#pragma once

// Gauss rules and adaptive panel quadrature used by every integral in the
// library: weighted norms, Theta-kernel integrals and the translation kernel.

#include <functional>
#include <span>
#include <vector>

namespace dunkl {

/// Nodes on [-1, 1]. `one_minus` and `one_plus` hold 1 - u and 1 + u computed
/// without cancellation near the endpoints.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> one_minus;
  std::vector<double> one_plus;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Gauss-Legendre rule with n nodes (weight 1 on [-1, 1]).
const GaussRule& gauss_legendre(int n);

/// Gauss-Jacobi rule for the weight (1 - u)^a (1 + u)^b on [-1, 1], a, b > -1,
/// built by Golub-Welsch. Weights sum to the weight's total mass.
GaussRule gauss_jacobi(int n, double a, double b);

struct QuadratureSpec {
  int panel_nodes = 10;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 40;
  /// Upper bound on the number of panels kept by the adaptive driver.
  int max_panels = 4000;
  /// Extra radius (in multiples of the Gaussian width) beyond the 8-sigma core.
  double gaussian_core = 8.0;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = true;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive panel quadrature: each panel is integrated with an
/// n-point Gauss-Legendre rule and compared against its two halves; the panel
/// with the largest discrepancy is bisected until the total estimate meets
/// max(abs_tol, rel_tol * |I|). `breaks` seeds the initial panels (sorted,
/// inside [lo, hi]); `initial_width` caps the width of those panels.
QuadResult integrate(const Integrand& f, double lo, double hi, const QuadratureSpec& spec,
                     std::span<const double> breaks = {}, double initial_width = 0.0);

/// Fixed n-point Gauss-Legendre on [lo, hi].
double integrate_fixed(const Integrand& f, double lo, double hi, int n);

}  // namespace dunkl

#pragma once

// Modulus of smoothness, an upper bound for the Peetre K-functional,
// truncated Besov-Dunkl seminorms and the omega-versus-K comparison.
//
//   omega(x)  = sup_{|y| <= x} ||R_k(y, f)||_{p,alpha}
//   K(x)      = inf_{f = f0 + f1} ||Lambda^{k-1} f0|| + x ||Lambda^k f1||
//   |f|^q     = int_0^inf (omega(x) / x^(beta + k - 1))^q dx / x

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "dunkl/remainder.hpp"
#include "dunkl/test_function.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

struct BesovIndex {
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  double beta = 0.5;
  double p = 2.0;
  /// kInfinity selects the sup form.
  double q = 2.0;
  int k = 1;

  bool q_infinite() const noexcept { return q == kInfinity; }
  void validate() const;
};

struct ModulusSpec {
  /// Samples of |y| per octave.
  int per_octave = 16;
  /// Octaves sampled below the smallest x of interest.
  int floor_octaves = 4;
  /// Parabolic refinement at interior local maxima of ||R_k(y, f)||.
  bool refine = true;

  void validate() const;
};

struct BesovSpecs {
  QuadratureSpec quad;
  TranslationKernelSpec kernel;
  ModulusSpec modulus;
  int theta0_nodes = 32;

  void validate() const;
};

/// ||R_k(y, f)|| on a shared sample of y in [-x_max, x_max] \ {0}; omega(x)
/// is the running maximum over |y| <= x, hence nondecreasing.
class ModulusTable {
 public:
  struct Sample {
    double y = 0.0;
    double norm = 0.0;
    double error = 0.0;
  };

  /// `extra` points are sampled exactly (both signs), so omega is exact
  /// there up to the sup over the sample.
  ModulusTable(const TestFunction& f, const BesovIndex& index, double x_min, double x_max, const BesovSpecs& specs,
               std::span<const double> extra = {});

  double omega(double x) const;
  /// Largest quadrature error estimate among the samples behind omega(x).
  double error_bound(double x) const;
  const std::vector<Sample>& samples() const noexcept { return samples_; }
  double max_error() const noexcept { return max_error_; }
  double x_max() const noexcept { return x_max_; }

 private:
  std::vector<Sample> samples_;
  std::vector<double> abs_y_;
  std::vector<double> prefix_max_;
  std::vector<double> prefix_error_;
  double max_error_ = 0.0;
  double x_max_ = 0.0;
};

double modulus(const TestFunction& f, const BesovIndex& index, double x, const BesovSpecs& specs = {});

struct KFunctionalBound {
  double value = 0.0;
  /// "trivial" (f0 = f), "matched" (anchor = x) or "anchor:<s>".
  std::string winner;
  double anchor = 0.0;
  double n0 = 0.0;
  double n1 = 0.0;
};

/// min of ||Lambda^{k-1} f|| and n0(s) + x n1(s) over the anchors s, where
/// (n0, n1) come from the constructive decomposition at scale s.
std::vector<KFunctionalBound> k_functional_upper(const TestFunction& f, const BesovIndex& index,
                                                 std::span<const double> x_grid, std::span<const double> anchors,
                                                 const BesovSpecs& specs = {});
KFunctionalBound k_functional_upper(const TestFunction& f, const BesovIndex& index, double x,
                                    const BesovSpecs& specs = {});

struct SeminormResult {
  /// (truncated + tail_low + tail_high)^(1/q), or the sampled sup for q = inf.
  double value = 0.0;
  double truncated = 0.0;
  double tail_low = 0.0;
  double tail_high = 0.0;
  double x_min = 0.0;
  double x_max = 0.0;
  int samples = 0;

  /// Integral including tails, before the 1/q power; equals value for q = inf.
  double total() const noexcept { return truncated + tail_low + tail_high; }
};

/// Log-spaced samples x_min 2^(i / per_octave) up to x_max, x_max included.
std::vector<double> log_grid(double x_min, double x_max, int per_octave);

/// Trapezoid rule in ln x over [x_min, x_max] on an omega table covering the
/// window. The tails assume omega ~ x^k below x_min and omega ~ x^(k-1)
/// above x_max, the two majorants that make the seminorm finite.
SeminormResult besov_seminorm(const ModulusTable& table, const BesovIndex& index, double x_min, double x_max,
                              int per_octave = 8);
SeminormResult besov_seminorm(const TestFunction& f, const BesovIndex& index, double x_min = 1e-3,
                              double x_max = 1e3, const BesovSpecs& specs = {});

struct EquivalenceReport {
  std::string function;
  double alpha = 0.0;
  BesovIndex index;
  std::vector<double> x_grid;
  std::vector<double> omega;
  std::vector<double> k_upper;
  std::vector<std::string> k_winner;
  std::vector<double> ratio;
  double c_low = 0.0;
  double c_high = 0.0;
  double admissible_spread = 50.0;
  std::vector<double> omega_error;
  /// "pass", "fail" or "degenerate" (omega = 0 on the whole grid).
  std::string status;

  double spread() const noexcept { return c_low > 0.0 ? c_high / c_low : 0.0; }
  bool passed() const noexcept { return status != "fail"; }
};

/// omega, K_upper and r(x) = omega / (x^{k-1} K_upper) on a sorted positive
/// grid; K anchors are the grid points themselves.
EquivalenceReport equivalence_report(const TestFunction& f, const BesovIndex& index, std::span<const double> x_grid,
                                     const BesovSpecs& specs = {}, double admissible_spread = 50.0);

}  // namespace dunkl

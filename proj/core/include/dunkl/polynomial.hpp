#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/special_functions.hpp"

namespace dunkl {

/// Real polynomial in the monomial basis; coeffs[i] multiplies x^i. Trailing
/// zeros are stripped, so the zero polynomial has no coefficients and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial monomial(int n, double c = 1.0);

  std::optional<int> degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  double coeff(int i) const;

  double operator()(double x) const;

  Polynomial derivative() const;
  Polynomial even_part() const;
  Polynomial odd_part() const;
  /// odd_part() / x, exact.
  Polynomial odd_quotient() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void normalize();

  std::vector<double> coeffs_;
};

/// Exact Dunkl operator on monomials: x^n -> n x^(n-1) for even n,
/// (n + 2 alpha + 1) x^(n-1) for odd n.
Polynomial poly_dunkl(const DunklParameter& param, const Polynomial& p);

/// Lambda^k applied exactly; k = 0 returns p.
Polynomial poly_dunkl_power(const DunklParameter& param, const Polynomial& p, int k);

}  // namespace dunkl

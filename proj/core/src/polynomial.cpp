#include "dunkl/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace dunkl {

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::monomial(int n, double c) {
  if (n < 0) throw std::invalid_argument("Polynomial::monomial: negative degree");
  std::vector<double> v(n + 1, 0.0);
  v[n] = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

std::optional<int> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

double Polynomial::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0.0;
}

double Polynomial::operator()(double x) const {
  double s = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * x + *it;
  return s;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::even_part() const {
  std::vector<double> v = coeffs_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = 0.0;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::odd_part() const {
  std::vector<double> v = coeffs_;
  for (std::size_t i = 0; i < v.size(); i += 2) v[i] = 0.0;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::odd_quotient() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> v(coeffs_.size() - 1, 0.0);
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) v[i - 1] = coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    if (!first) os << " + ";
    os << coeffs_[i];
    if (i > 0) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

Polynomial poly_dunkl(const DunklParameter& param, const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  const double g = param.gamma();
  std::vector<double> v(c.size() - 1, 0.0);
  for (std::size_t n = 1; n < c.size(); ++n) {
    const double factor = n % 2 == 0 ? static_cast<double>(n) : static_cast<double>(n) + g;
    v[n - 1] = factor * c[n];
  }
  return Polynomial(std::move(v));
}

Polynomial poly_dunkl_power(const DunklParameter& param, const Polynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("poly_dunkl_power: k must be nonnegative");
  Polynomial q = p;
  for (int j = 0; j < k && !q.is_zero(); ++j) q = poly_dunkl(param, q);
  return q;
}

}  // namespace dunkl

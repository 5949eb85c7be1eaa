#include "dunkl/theta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dunkl {

TermSum::TermSum(const DunklParameter& param, Parity parity, double x_anchor)
    : param_(param), parity_(parity), x_anchor_(x_anchor) {
  if (x_anchor == 0.0 || !std::isfinite(x_anchor)) throw std::invalid_argument("TermSum: x must be nonzero");
}

double TermSum::exponent_value(const Exponent& e) const { return e.shift + e.gamma_mult * param_.gamma(); }

bool TermSum::same_exponent(const Exponent& a, const Exponent& b) const {
  if (a == b) return true;
  if (const auto& g = param_.exact_gamma()) {
    return static_cast<std::int64_t>(a.shift - b.shift) * g->den ==
           static_cast<std::int64_t>(b.gamma_mult - a.gamma_mult) * g->num;
  }
  return std::abs(exponent_value(a) - exponent_value(b)) < 1e-12;
}

void TermSum::add(double coeff, Exponent exponent, int log_power) {
  if (log_power < 0) throw std::invalid_argument("TermSum: log power must be >= 0");
  if (!std::isfinite(coeff)) throw std::invalid_argument("TermSum: non-finite coefficient");
  if (coeff == 0.0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->log_power == log_power && same_exponent(it->exponent, exponent)) {
      it->coeff += coeff;
      if (it->coeff == 0.0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({coeff, exponent, exponent_value(exponent), log_power});
}

double TermSum::magnitude(double t) const {
  const double lt = std::log(t);
  double s = 0.0;
  for (const PowerLogTerm& term : terms_) {
    double v = term.coeff * (term.e == 0.0 ? 1.0 : std::exp(term.e * lt));
    for (int j = 0; j < term.log_power; ++j) v *= lt;
    s += v;
  }
  return s;
}

double TermSum::operator()(double y) const {
  const double t = std::abs(y);
  if (t == 0.0) throw std::out_of_range("Theta kernels are evaluated at y != 0");
  if (t > std::abs(x_anchor_) * (1.0 + 1e-12)) throw std::out_of_range("Theta kernels need |y| <= |x|");
  const double s = magnitude(t);
  return parity_ == Parity::sgn_odd && y < 0.0 ? -s : s;
}

TermSum TermSum::times_weight(int power) const {
  TermSum out(param_, parity_, x_anchor_);
  for (const PowerLogTerm& t : terms_) {
    out.add(t.coeff, Exponent{t.exponent.shift, t.exponent.gamma_mult + power}, t.log_power);
  }
  return out;
}

TermSum TermSum::with_parity(Parity parity) const {
  TermSum out = *this;
  out.parity_ = parity;
  return out;
}

std::string TermSum::to_report() const {
  std::ostringstream os;
  os.precision(17);
  const char* par = parity_ == Parity::even ? "even" : "sgn-odd";
  for (const PowerLogTerm& t : terms_) os << t.coeff << ' ' << t.e << ' ' << t.log_power << ' ' << par << '\n';
  return os.str();
}

TermSum term_integrate(const TermSum& s, double upper) {
  if (!(upper > 0.0)) throw std::invalid_argument("term_integrate: upper limit must be > 0");
  TermSum out(s.param(), Parity::even, s.x_anchor());
  const double lx = std::log(upper);
  const Exponent minus_one{-1, 0};
  for (const PowerLogTerm& term : s.terms()) {
    const int m = term.log_power;
    if (s.same_exponent(term.exponent, minus_one)) {
      // int z^-1 (ln z)^m = (ln z)^(m+1) / (m+1)
      const double c = term.coeff / (m + 1);
      out.add(c * std::pow(lx, m + 1), Exponent{}, 0);
      out.add(-c, Exponent{}, m + 1);
      continue;
    }
    // int z^e (ln z)^m = z^(e+1) sum_j (-1)^j m!/(m-j)! (ln z)^(m-j) / (e+1)^(j+1)
    const double e1 = term.e + 1.0;
    const Exponent raised{term.exponent.shift + 1, term.exponent.gamma_mult};
    const double xe = std::exp(e1 * lx);
    double falling = 1.0;
    for (int j = 0; j <= m; ++j) {
      if (j > 0) falling *= m - j + 1;
      const double c = term.coeff * (j % 2 == 0 ? 1.0 : -1.0) * falling / std::pow(e1, j + 1);
      out.add(c * xe * std::pow(lx, m - j), Exponent{}, 0);
      out.add(-c, raised, m - j);
    }
  }
  return out;
}

double ThetaKernel::weighted(double y) const {
  const double t = std::abs(y);
  if (t == 0.0) throw std::out_of_range("Theta kernels are evaluated at y != 0");
  const double vu = u_weighted.magnitude(t);
  const double vv = v_weighted.magnitude(t);
  return y > 0.0 ? vu + vv : vu - vv;
}

ThetaKernel theta_build(const DunklParameter& param, int k, double x) {
  if (k < 0) throw std::invalid_argument("theta_build: k must be >= 0");
  if (x == 0.0 || !std::isfinite(x)) throw std::invalid_argument("theta_build: x must be nonzero");
  const double ax = std::abs(x);
  TermSum u(param, Parity::even, x);
  u.add((x > 0.0 ? 0.5 : -0.5) / weight_A(param, ax), Exponent{}, 0);
  TermSum v(param, Parity::sgn_odd, x);
  v.add(0.5, Exponent{0, -1}, 0);
  for (int j = 1; j <= k; ++j) {
    TermSum next_u = term_integrate(v, ax);
    TermSum next_v = term_integrate(u.times_weight(1), ax).times_weight(-1).with_parity(Parity::sgn_odd);
    u = std::move(next_u);
    v = std::move(next_v);
  }
  TermSum uw = u.times_weight(1);
  TermSum vw = v.times_weight(1);
  return ThetaKernel{std::move(u), std::move(v), std::move(uw), std::move(vw), k};
}

double theta_eval(const TermSum& s, double y) { return s(y); }

double theta_eval(const ThetaKernel& theta, double y) { return theta(y); }

namespace {

// Roots of g on (0, X], located by scanning a log+linear grid and bisecting.
std::vector<double> sign_changes(const std::function<double(double)>& g, double X) {
  std::vector<double> grid;
  for (int i = 40; i >= 1; --i) grid.push_back(X * std::pow(2.0, -i));
  for (int i = 1; i <= 200; ++i) grid.push_back(X * i / 200.0);
  std::sort(grid.begin(), grid.end());
  std::vector<double> roots;
  double a = grid.front();
  double ga = g(a);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    double b = grid[i];
    double gb = g(b);
    if (ga == 0.0) {
      roots.push_back(a);
    } else if (ga * gb < 0.0) {
      double lo = a;
      double hi = b;
      double glo = ga;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * X; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm < 0.0) == (glo < 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    ga = gb;
  }
  return roots;
}

}  // namespace

QuadResult theta_abs_integral(const DunklParameter& param, int k, double x, const QuadratureSpec& spec) {
  if (k < 1) throw std::invalid_argument("theta_abs_integral: k must be >= 1");
  const ThetaKernel theta = theta_build(param, k - 1, x);
  const TermSum& uw = theta.u_weighted;
  const TermSum& vw = theta.v_weighted;
  const double X = std::abs(x);
  QuadResult total;
  for (double side : {1.0, -1.0}) {
    auto g = [&](double t) { return uw.magnitude(t) + side * vw.magnitude(t); };
    const std::vector<double> roots = sign_changes(g, X);
    QuadResult r = integrate([&](double t) { return std::abs(g(t)); }, 0.0, X, spec, roots);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
  }
  if (!total.converged) throw NumericError("theta_abs_integral: quadrature missed tolerance", total.error);
  return total;
}

double theta_abs_bound(const DunklParameter& param, int k, double x) {
  const double ax = std::abs(x);
  return b_coeff(param, k, ax) + ax * b_coeff(param, k - 1, ax);
}

MomentResult theta_moment(const DunklParameter& param, int p, double x, const QuadratureSpec& spec) {
  if (p < 0) throw std::invalid_argument("theta_moment: p must be >= 0");
  const ThetaKernel theta = theta_build(param, 0, x);
  const TermSum& uw = theta.u_weighted;
  const TermSum& vw = theta.v_weighted;
  const double X = std::abs(x);
  auto integrand = [&](double t) {
    const double a = uw.magnitude(t);
    const double b = vw.magnitude(t);
    return (a + b) * b_coeff(param, p, t) + (a - b) * b_coeff(param, p, -t);
  };
  QuadResult r = integrate(integrand, 0.0, X, spec);
  if (!r.converged) throw NumericError("theta_moment: quadrature missed tolerance", r.error);
  MomentResult out;
  out.value = r.value;
  out.quad_error = r.error;
  out.expected = b_coeff(param, p + 1, x);
  out.residual = std::abs(out.value - out.expected);
  return out;
}

}  // namespace dunkl

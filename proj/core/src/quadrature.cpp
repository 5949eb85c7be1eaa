#include "dunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace dunkl {

namespace {

GaussRule build_legendre(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p1 = 1.0;
    double p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
    }
    dp = n * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  r.one_minus.resize(n);
  r.one_plus.resize(n);
  for (int i = 0; i < n; ++i) {
    r.one_minus[i] = 1.0 - r.nodes[i];
    r.one_plus[i] = 1.0 + r.nodes[i];
  }
  return r;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (panel_nodes < 4) throw std::invalid_argument("QuadratureSpec.panel_nodes must be >= 4");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw std::invalid_argument("QuadratureSpec tolerances must be > 0");
  }
  if (max_depth < 1) throw std::invalid_argument("QuadratureSpec.max_depth must be >= 1");
  if (max_panels < 1) throw std::invalid_argument("QuadratureSpec.max_panels must be >= 1");
}

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(build_legendre(n));
  return *slot;
}

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be positive");
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");

  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 1));
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    if (k == 0) {
      diag[k] = (b - a) / (ab + 2.0);
    } else {
      diag[k] = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta = 0.0;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off[k - 1] = std::sqrt(beta);
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));

  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  if (n == 1) {
    r.nodes[0] = diag[0];
    r.weights[0] = mu0;
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off.head(n - 1), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigen solver failed");
    for (int i = 0; i < n; ++i) {
      r.nodes[i] = solver.eigenvalues()[i];
      const double v = solver.eigenvectors()(0, i);
      r.weights[i] = mu0 * v * v;
    }
  }
  r.one_minus.resize(n);
  r.one_plus.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = std::clamp(r.nodes[i], -1.0, 1.0);
    r.one_minus[i] = 1.0 - r.nodes[i];
    r.one_plus[i] = 1.0 + r.nodes[i];
  }
  return r;
}

double integrate_fixed(const Integrand& f, double lo, double hi, int n) {
  const GaussRule& g = gauss_legendre(n);
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g.weights[i] * f(c + h * g.nodes[i]);
  return s * h;
}

namespace {

struct Panel {
  double lo;
  double hi;
  double left;
  double right;
  double error;
  int depth;

  double value() const { return left + right; }
  bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

QuadResult integrate(const Integrand& f, double lo, double hi, const QuadratureSpec& spec,
                     std::span<const double> breaks, double initial_width) {
  spec.validate();
  QuadResult out;
  if (!(hi > lo)) return out;
  const int n = spec.panel_nodes;

  auto make_panel = [&](double a, double b, double whole, int depth) {
    const double m = 0.5 * (a + b);
    Panel p{a, b, integrate_fixed(f, a, m, n), integrate_fixed(f, m, b, n), 0.0, depth};
    out.evaluations += 2 * n;
    p.error = std::abs(whole - p.value());
    return p;
  };

  std::vector<double> edges{lo};
  for (double b : breaks) {
    if (b > edges.back() && b < hi) edges.push_back(b);
  }
  edges.push_back(hi);

  std::priority_queue<Panel> queue;
  std::vector<Panel> frozen;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i];
    const double b = edges[i + 1];
    int pieces = 1;
    if (initial_width > 0.0) pieces = std::max(1, static_cast<int>(std::ceil((b - a) / initial_width)));
    for (int j = 0; j < pieces; ++j) {
      const double pa = a + (b - a) * j / pieces;
      const double pb = j + 1 == pieces ? b : a + (b - a) * (j + 1) / pieces;
      const double whole = integrate_fixed(f, pa, pb, n);
      out.evaluations += n;
      queue.push(make_panel(pa, pb, whole, 0));
    }
  }

  double total = 0.0;
  double err = 0.0;
  auto totals = [&] {
    total = 0.0;
    err = 0.0;
    auto copy = queue;
    while (!copy.empty()) {
      total += copy.top().value();
      err += copy.top().error;
      copy.pop();
    }
    for (const Panel& p : frozen) {
      total += p.value();
      err += p.error;
    }
  };

  // Running sums avoid rescanning the queue; refreshed periodically against drift.
  totals();
  int steps = 0;
  while (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (queue.empty()) break;
    Panel p = queue.top();
    queue.pop();
    if (p.depth >= spec.max_depth) {
      frozen.push_back(p);
      continue;
    }
    if (static_cast<int>(queue.size() + frozen.size()) + 2 > spec.max_panels) {
      queue.push(p);
      break;
    }
    const double m = 0.5 * (p.lo + p.hi);
    Panel l = make_panel(p.lo, m, p.left, p.depth + 1);
    Panel r = make_panel(m, p.hi, p.right, p.depth + 1);
    total += l.value() + r.value() - p.value();
    err += l.error + r.error - p.error;
    queue.push(l);
    queue.push(r);
    if (++steps % 256 == 0) totals();
  }
  totals();
  out.value = total;
  out.error = err;
  out.converged = err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
  return out;
}

}  // namespace dunkl

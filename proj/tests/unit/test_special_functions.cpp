#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

#include "dunkl/special_functions.hpp"
#include "dunkl/test_function.hpp"

using namespace dunkl;
using boost::multiprecision::cpp_rational;

namespace {

// Long-double brute-force sum of the normalized series, used as an oracle.
long double brute_bessel(long double a, long double t) {
  long double sum = 0.0L;
  for (int n = 0; n < 400; ++n) {
    long double term = std::pow(t / 2.0L, 2 * n);
    for (int j = 1; j <= n; ++j) term /= j * (a + j);
    sum += term;
  }
  return sum;
}

// b_p(x) with exact rational arithmetic, alpha = an/ad and x = xn/xd.
cpp_rational exact_b(int p, long an, long ad, long xn, long xd) {
  const cpp_rational a1 = cpp_rational(an, ad) + 1;
  const int m = p / 2;
  cpp_rational denom = 1;
  const int poch = p % 2 == 0 ? m : m + 1;
  for (int j = 0; j < poch; ++j) denom *= a1 + j;
  for (int j = 2; j <= m; ++j) denom *= j;
  cpp_rational h = 1;
  for (int j = 0; j < p; ++j) h *= cpp_rational(xn, 2 * xd);
  return h / denom;
}

}  // namespace

TEST_CASE("DunklParameter validation") {
  CHECK_THROWS_AS(DunklParameter(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(DunklParameter(-0.6), std::invalid_argument);
  CHECK_THROWS_AS(DunklParameter(NAN), std::invalid_argument);
  const DunklParameter p(0.5);
  CHECK(p.measure_norm() == doctest::Approx(std::pow(2.0, 1.5) * std::tgamma(1.5)).epsilon(1e-15));
  CHECK(p.measure_norm() > 0.0);
  CHECK_FALSE(p.exact_gamma().has_value());

  const DunklParameter r = DunklParameter::parse("0.5");
  REQUIRE(r.exact_gamma().has_value());
  CHECK(r.exact_gamma()->num == 2);
  CHECK(r.exact_gamma()->den == 1);
  const DunklParameter q = DunklParameter::parse("-0.25");
  CHECK(q.exact_gamma()->num == 1);
  CHECK(q.exact_gamma()->den == 2);
  CHECK_THROWS_AS(DunklParameter::parse("-0.6"), std::invalid_argument);
  CHECK_THROWS_AS(DunklParameter::parse("abc"), std::invalid_argument);

  const DunklParameter c = DunklParameter::classical();
  CHECK(c.is_classical());
  CHECK(c.gamma() == 0.0);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(2.5, 0) == 1.0);
  CHECK(pochhammer(1.0, 4) == 24.0);
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5).epsilon(1e-15));
  CHECK(pochhammer(0.5, 3) == doctest::Approx(1.875).epsilon(1e-15));
  CHECK_THROWS(pochhammer(1.0, -1));
}

TEST_CASE("normalized_bessel_i") {
  CHECK(normalized_bessel_i(0.3, 0.0) == 1.0);
  CHECK(normalized_bessel_i(-0.5, 1.0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
  CHECK(normalized_bessel_i(0.5, 1.0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
  CHECK(normalized_bessel_i(-0.5, 1.0) == doctest::Approx(1.5430806348152437).epsilon(1e-15));
  CHECK(normalized_bessel_i(0.5, 1.0) == doctest::Approx(1.1752011936438014).epsilon(1e-15));

  for (double a : {-0.4, 0.0, 0.7, 2.5}) {
    for (double t : {-3.0, -0.2, 0.5, 4.0}) {
      const double v = normalized_bessel_i(a, t);
      CHECK(v >= 1.0);
      CHECK(v == normalized_bessel_i(a, -t));
      CHECK(v == doctest::Approx(static_cast<double>(brute_bessel(a, t))).epsilon(1e-14));
    }
  }

  BesselSeriesSpec tight{3, 1e-15};
  CHECK_THROWS_AS(normalized_bessel_i(0.0, 10.0, tight), NumericError);
  CHECK_THROWS_AS(normalized_bessel_i(0.0, 1.0, BesselSeriesSpec{0, 1e-15}), std::invalid_argument);
}

TEST_CASE("bessel derivative matches finite differences") {
  for (double a : {-0.3, 0.5, 1.5}) {
    for (double t : {0.0, 0.4, -1.7, 3.0}) {
      const double fd = numeric_derivative([a](double s) { return normalized_bessel_i(a, s); }, t);
      CHECK(normalized_bessel_i_derivative(a, t) == doctest::Approx(fd).epsilon(1e-9));
      // d/dt j_a(it) = t / (2(a+1)) j_{a+1}(it)
      CHECK(normalized_bessel_i_derivative(a, t) ==
            doctest::Approx(t / (2 * (a + 1)) * normalized_bessel_i(a + 1, t)).epsilon(1e-14));
    }
  }
}

TEST_CASE("dunkl_kernel") {
  for (double a : {-0.4, 0.0, 0.5, 3.0}) {
    const DunklParameter p(a);
    CHECK(dunkl_kernel(p, 0.0, 3.0) == 1.0);
    CHECK(dunkl_kernel(p, 1.0, 0.0) == 1.0);
    for (double z : {-4.0, -1.0, 0.3, 2.0}) CHECK(dunkl_kernel(p, 1.0, z) > 0.0);
  }
  const DunklParameter c = DunklParameter::classical();
  CHECK(dunkl_kernel(c, 1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  // The Bessel form at alpha = -1/2 is cosh + sinh as well.
  CHECK(normalized_bessel_i(-0.5, 1.0) + 1.0 * normalized_bessel_i(0.5, 1.0) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("dunkl_kernel eigen-equation") {
  // Lambda E(lam .)(x) = lam E(lam x), via dunkl_apply on the closed-form kernel.
  for (double a : {-0.4, 0.0, 0.5, 1.5}) {
    const DunklParameter p(a);
    for (double lam : {-2.0, -0.5, 1.0, 2.5}) {
      const DunklExponential e(p, lam);
      for (double x : {-2.0, -0.7, 0.0, 0.4, 1.9}) {
        if (std::abs(lam * x) > 5.0) continue;
        const double residual = std::abs(dunkl_apply(p, e, x) - lam * dunkl_kernel(p, lam, x));
        CHECK(residual < 1e-8);
      }
    }
  }
}

TEST_CASE("weight_A and measure") {
  CHECK(weight_A(DunklParameter(0.5), -2.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(weight_A(DunklParameter(1.3), 1.0) == 1.0);
  CHECK(weight_A(DunklParameter(0.0), 3.0) == 3.0);
  CHECK(weight_A(DunklParameter(0.2), 0.0) == 0.0);
  const DunklParameter p(0.5);
  CHECK(measure_density(p, 2.0) == doctest::Approx(4.0 / p.measure_norm()));
}

TEST_CASE("b_coeff closed forms") {
  for (double a : {-0.4, 0.0, 0.5, 1.5}) {
    const DunklParameter p(a);
    CHECK(b_coeff(p, 0, 7.0) == 1.0);
    CHECK(b_coeff(p, 1, 1.3) == doctest::Approx(1.3 / (2 * (a + 1))).epsilon(1e-15));
    for (int k = 0; k <= 8; ++k) {
      double prev = 0.0;
      for (double x = 0.1; x < 4.0; x += 0.3) {
        const double b = b_coeff(p, k, x);
        CHECK(b > 0.0);
        if (k > 0) CHECK(b > prev);
        prev = b;
        CHECK(b_coeff(p, k, -x) == (k % 2 == 0 ? b : -b));
      }
    }
  }
  const DunklParameter c = DunklParameter::classical();
  double fact = 1.0;
  for (int k = 0; k <= 10; ++k) {
    if (k > 0) fact *= k;
    CHECK(b_coeff(c, k, 1.7) == doctest::Approx(std::pow(1.7, k) / fact).epsilon(1e-14));
  }
}

TEST_CASE("b_coeff against exact rational evaluation") {
  struct Case {
    long an, ad;
  };
  for (Case a : {Case{-2, 5}, Case{0, 1}, Case{1, 2}, Case{3, 2}, Case{-1, 2}}) {
    const DunklParameter p = a.an * 2 == -a.ad ? DunklParameter::classical() : DunklParameter::rational(a.an, a.ad);
    for (int k = 0; k <= 12; ++k) {
      for (auto [xn, xd] : {std::pair{1L, 10L}, std::pair{3L, 2L}, std::pair{-2L, 1L}, std::pair{5L, 1L}}) {
        const double exact = static_cast<double>(exact_b(k, a.an, a.ad, xn, xd));
        const double got = b_coeff(p, k, static_cast<double>(xn) / static_cast<double>(xd));
        CHECK(std::abs(got - exact) <= 1e-12 * std::abs(exact));
      }
    }
  }
}

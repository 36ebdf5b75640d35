#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "wavecas/common.hpp"
#include "wavecas/numerics/differentiation.hpp"
#include "wavecas/numerics/quadrature.hpp"
#include "wavecas/numerics/special_functions.hpp"

using namespace wavecas;
using numerics::Rational;

TEST_CASE("bernoulli numbers: classical values and convention") {
  CHECK(numerics::bernoulli_number(0) == Rational(1));
  CHECK(numerics::bernoulli_number(1) == Rational(-1, 2));
  CHECK(numerics::bernoulli_number(2) == Rational(1, 6));
  CHECK(numerics::bernoulli_number(3) == Rational(0));
  CHECK(numerics::bernoulli_number(4) == Rational(-1, 30));
  CHECK(numerics::bernoulli_number(6) == Rational(1, 42));
  CHECK(numerics::bernoulli_number(12) == Rational(-691, 2730));
  for (unsigned m = 3; m <= 59; m += 2) CHECK(numerics::bernoulli_number(m) == 0);
  CHECK_THROWS_AS(numerics::bernoulli_number(61), std::domain_error);
}

TEST_CASE("bernoulli numbers satisfy the defining recurrence") {
  for (unsigned n = 1; n <= 30; ++n) {
    Rational sum = 0;
    for (unsigned k = 0; k <= n; ++k)
      sum += Rational(numerics::binomial(n + 1, k)) * numerics::bernoulli_number(k);
    CHECK(sum == 0);
  }
}

TEST_CASE("bernoulli polynomials: frozen values") {
  CHECK(numerics::bernoulli_polynomial(4, 0.0) == doctest::Approx(-1.0 / 30.0).epsilon(1e-14));
  CHECK(numerics::bernoulli_polynomial(1, 0.5) == doctest::Approx(0.0).epsilon(1e-14));
  // B_4(1/2) = 1/16 - 2/8 + 1/4 - 1/30 = 7/240
  CHECK(numerics::bernoulli_polynomial(4, 0.5) == doctest::Approx(7.0 / 240.0).epsilon(1e-13));
}

TEST_CASE("bernoulli polynomial identities on a grid") {
  // d/dx B_p(x) = p B_{p-1}(x), checked with the numeric differentiator.
  for (unsigned p = 2; p <= 8; ++p) {
    for (double x : {0.1, 0.35, 0.5, 0.8, 1.7}) {
      const double lhs = numerics::differentiate_value(
          [p](double t) { return numerics::bernoulli_polynomial(p, t); }, x,
          {1, 1e-3, 3});
      const double rhs = p * numerics::bernoulli_polynomial(p - 1, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
    }
  }
  // B_p(x+1) - B_p(x) = p x^{p-1}
  for (unsigned p = 1; p <= 8; ++p) {
    for (double x : {0.0, 0.25, 0.9, 2.0}) {
      const double diff =
          numerics::bernoulli_polynomial(p, x + 1.0) - numerics::bernoulli_polynomial(p, x);
      CHECK(diff == doctest::Approx(p * std::pow(x, p - 1.0)).epsilon(1e-11));
    }
  }
}

TEST_CASE("periodized bernoulli weight") {
  CHECK(numerics::periodized_bernoulli(4, 3.0) == doctest::Approx(-1.0 / 30.0).epsilon(1e-14));
  CHECK(numerics::periodized_bernoulli(4, 2.5) == doctest::Approx(7.0 / 240.0).epsilon(1e-13));
  // B_2(0.25) = 1/16 - 1/4 + 1/6 = -1/48
  CHECK(numerics::periodized_bernoulli(2, 7.25) == doctest::Approx(-1.0 / 48.0).epsilon(1e-13));
  // Period 1 in the argument.
  CHECK(numerics::periodized_bernoulli(3, 0.37) ==
        doctest::Approx(numerics::periodized_bernoulli(3, 5.37)).epsilon(1e-13));
}

TEST_CASE("incomplete gamma, integer order") {
  CHECK(numerics::incomplete_gamma_upper(2, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(numerics::incomplete_gamma_upper(1, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  // Gamma(3, 2) = 2 e^{-2} (1 + 2 + 2) = 10 e^{-2}
  CHECK(numerics::incomplete_gamma_upper(3, 2.0) ==
        doctest::Approx(10.0 * std::exp(-2.0)).epsilon(1e-14));
  // Recurrence Gamma(n+1,x) = n Gamma(n,x) + x^n e^{-x}
  for (unsigned n = 1; n <= 10; ++n) {
    for (double x : {0.0, 0.5, 1.0, 2.5, 5.0, 10.0}) {
      const double lhs = numerics::incomplete_gamma_upper(n + 1, x);
      const double rhs =
          n * numerics::incomplete_gamma_upper(n, x) + std::pow(x, double(n)) * std::exp(-x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("half-integer incomplete gamma anchors the hermitian moments") {
  // Gamma(1/2, y) = sqrt(pi) erfc(sqrt(y))
  CHECK(numerics::upper_gamma_half(0, 0.0) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  // Gamma(3/2) = sqrt(pi)/2
  CHECK(numerics::upper_gamma_half(1, 0.0) ==
        doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-14));
  // Recurrence consistency against quadrature for Gamma(5/2, 1.3).
  numerics::QuadratureSpec spec;
  const double quad = numerics::integrate_to_infinity(
      [](double t) { return std::pow(t, 1.5) * std::exp(-t); }, 1.3, spec);
  CHECK(numerics::upper_gamma_half(2, 1.3) == doctest::Approx(quad).epsilon(1e-10));
}

namespace {

// Independent high-precision series oracle for 1F1, summed to full precision
// with 50-digit floats.
double kummer_oracle(double a, double b, double z) {
  using big = boost::multiprecision::cpp_bin_float_50;
  big term = 1, sum = 1;
  for (int j = 0; j < 200; ++j) {
    term *= (big(a) + j) / (big(b) + j) * big(z) / (j + 1);
    sum += term;
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("kummer 1F1") {
  CHECK(numerics::kummer_1f1(2.0, 1.5, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(numerics::kummer_1f1(1.0, 1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(numerics::kummer_1f1(2.0, 1.5, -0.5) ==
        doctest::Approx(kummer_oracle(2.0, 1.5, -0.5)).epsilon(1e-13));
  // Spot checks across the supported range, including the large negative
  // arguments the hermitian position profiles need.
  for (double z : {-40.0, -10.0, -2.0, 3.0, 25.0}) {
    CHECK(numerics::kummer_1f1(2.5, 1.5, z) ==
          doctest::Approx(kummer_oracle(2.5, 1.5, z)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(numerics::kummer_1f1(1.0, -2.0, 0.5), std::domain_error);
}

TEST_CASE("finite and semi-infinite quadrature") {
  numerics::QuadratureSpec spec;
  // Gamma function moments.
  for (int m = 2; m <= 5; ++m) {
    const double value = numerics::integrate_to_infinity(
        [m](double u) { return std::pow(u, m - 1.0) * std::exp(-u); }, 0.0, spec);
    CHECK(value == doctest::Approx(std::tgamma(double(m))).epsilon(1e-11));
  }
  // int_0^1 B_4(x) dx = 0
  const double b4 = numerics::integrate(
      [](double x) { return numerics::bernoulli_polynomial(4, x); }, 0.0, 1.0, spec);
  CHECK(b4 == doctest::Approx(0.0).epsilon(1e-13));
  // Exact for polynomials.
  const double poly = numerics::integrate([](double x) { return x * x * x - 2.0 * x; }, -1.0,
                                          2.0, spec);
  CHECK(poly == doctest::Approx(15.0 / 4.0 - 3.0).epsilon(1e-13));
}

TEST_CASE("quadrature failure carries its best estimate") {
  numerics::QuadratureSpec strict;
  strict.abs_tol = 1e-15;
  strict.rel_tol = 1e-15;
  strict.max_subdivisions = 4;
  try {
    numerics::integrate([](double x) { return std::sqrt(std::abs(x - 0.3717)); }, 0.0, 1.0,
                        strict);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_bound() >= 0.0);
  }
}

TEST_CASE("periodized-weight quadrature") {
  numerics::QuadratureSpec spec;
  // Constant g over [0,10]: the weight integrates to zero on each period.
  const double zero = numerics::integrate_periodized_weight(
      [](double x) { return x <= 10.0 ? 1.0 : 0.0; }, 4, spec, {}, 0, 10.0);
  CHECK(zero == doctest::Approx(0.0).epsilon(1e-12));

  // g(x) = x on [0,1]: int x (x - 1/2) dx = 1/12.
  const double ramp = numerics::integrate_periodized_weight(
      [](double x) { return x <= 1.0 ? x : 0.0; }, 1, spec, {}, 0, 1.0);
  CHECK(ramp == doctest::Approx(1.0 / 12.0).epsilon(1e-12));

  // Euler-Maclaurin closure for F(x) = e^{-x} at p = 2:
  //   F(0)/2 + sum_{n>=1} F(n) = int_0^inf F - B_2/2! F'(0) + R_2,
  // with R_2 = -int_0^inf F''(x) B_2({x})/2! dx and sum = 1/(e-1).
  const double r2 = -numerics::integrate_periodized_weight(
      [](double x) { return std::exp(-x); }, 2, spec);
  const double lhs = 0.5 + 1.0 / (std::exp(1.0) - 1.0);
  const double rhs = 1.0 + (1.0 / 6.0) / 2.0 + r2;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
}

TEST_CASE("periodized weight against symbolic polynomial evaluation") {
  // g(x) = x^2 (2-x)^2 on [0,2]: expand g(x) B_3(x-floor x)/3! and integrate
  // each unit interval exactly with rational arithmetic.
  auto poly_integral = []() {
    // B_3(t) = t^3 - 1.5 t^2 + 0.5 t.  On [0,1]: g(x) = x^2(2-x)^2, t = x.
    // On [1,2]: t = x-1.  Use exact fractions.
    using R = Rational;
    auto b3 = [](const std::array<R, 8>& poly) {
      // integrate poly(t) over [0,1]: sum c_k/(k+1)
      R total = 0;
      for (std::size_t k = 0; k < poly.size(); ++k) total += poly[k] / int(k + 1);
      return total;
    };
    // On [0,1]: g(t) = t^2 (2-t)^2 = 4t^2 - 4t^3 + t^4; times B_3(t)/6.
    // (4t^2 - 4t^3 + t^4)(t^3 - (3/2)t^2 + (1/2)t)/6
    std::array<R, 8> first{};
    const std::array<R, 5> g1{0, 0, 4, -4, 1};
    const std::array<R, 4> w{0, R(1, 2), R(-3, 2), 1};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 4; ++j) first[i + j] += g1[i] * w[j] / 6;
    // On [1,2] with x = 1 + t: g = (1+t)^2 (1-t)^2 = (1-t^2)^2 = 1 - 2t^2 + t^4.
    std::array<R, 8> second{};
    const std::array<R, 5> g2{1, 0, -2, 0, 1};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 4; ++j) second[i + j] += g2[i] * w[j] / 6;
    return static_cast<double>(b3(first) + b3(second));
  }();
  numerics::QuadratureSpec spec;
  const double numeric = numerics::integrate_periodized_weight(
      [](double x) { return x <= 2.0 ? x * x * (2.0 - x) * (2.0 - x) : 0.0; }, 3, spec, {}, 0,
      2.0);
  CHECK(numeric == doctest::Approx(poly_integral).epsilon(1e-10));
}

TEST_CASE("numerical differentiation") {
  CHECK(numerics::differentiate_value([](double x) { return std::exp(x); }, 0.0, {1, 0.0, 3}) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(numerics::differentiate_value([](double x) { return std::pow(x, 4); }, 1.0,
                                      {3, 0.0, 3}) == doctest::Approx(24.0).epsilon(1e-6));
  CHECK(numerics::differentiate_value([](double k) { return std::exp(-k * k); }, 0.0,
                                      {2, 0.0, 3}) == doctest::Approx(-2.0).epsilon(1e-8));
  // Monomials up to degree 6, all orders.
  for (int order = 1; order <= 5; ++order) {
    const double x0 = 0.7;
    auto f = [](double x) { return std::pow(x, 6); };
    double exact = std::pow(x0, 6.0 - order);
    for (int i = 0; i < order; ++i) exact *= 6 - i;
    const auto result = numerics::differentiate(f, x0, {order, 0.0, 3});
    CHECK(result.value == doctest::Approx(exact).epsilon(1e-6));
  }
}

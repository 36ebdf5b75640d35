#include "wavecas/numerics/special_functions.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "wavecas/common.hpp"

namespace wavecas::numerics {

namespace {

constexpr unsigned kMaxBernoulliIndex = 60;

std::vector<Rational> build_bernoulli_table() {
  std::vector<Rational> table(kMaxBernoulliIndex + 1);
  table[0] = 1;
  for (unsigned n = 1; n <= kMaxBernoulliIndex; ++n) {
    // sum_{k=0}^{n} C(n+1,k) B_k = 0  =>  B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k
    Rational acc = 0;
    for (unsigned k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * table[k];
    table[n] = -acc / (n + 1);
  }
  return table;
}

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = build_bernoulli_table();
  return table;
}

}  // namespace

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (unsigned j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

Rational bernoulli_number(unsigned m) {
  if (m > kMaxBernoulliIndex)
    throw std::domain_error("bernoulli_number: index above 60 rejected");
  return bernoulli_table()[m];
}

double bernoulli_number_d(unsigned m) {
  return static_cast<double>(bernoulli_number(m));
}

double bernoulli_polynomial(unsigned p, double x) {
  double sum = 0.0;
  double xpow = 1.0;  // x^{p-k} built from the k = p end downwards
  for (unsigned k = p;; --k) {
    sum += static_cast<double>(binomial(p, k)) * bernoulli_number_d(k) * xpow;
    if (k == 0) break;
    xpow *= x;
  }
  return sum;
}

double periodized_bernoulli(unsigned p, double x) {
  if (p == 0) throw std::domain_error("periodized_bernoulli: p >= 1 required");
  double frac = x - std::floor(x);
  return bernoulli_polynomial(p, frac);
}

double incomplete_gamma_upper(unsigned n, double x) {
  if (n == 0) throw std::domain_error("incomplete_gamma_upper: integer order n >= 1 required");
  if (x < 0.0) throw std::domain_error("incomplete_gamma_upper: x >= 0 required");
  // Gamma(n,x) = (n-1)! e^{-x} sum_{l=0}^{n-1} x^l / l!; every term positive.
  double series_term = std::exp(-x);
  double sum = series_term;
  for (unsigned l = 1; l < n; ++l) {
    series_term *= x / l;
    sum += series_term;
  }
  return std::tgamma(static_cast<double>(n)) * sum;
}

double upper_gamma_half(unsigned l, double y) {
  if (y < 0.0) throw std::domain_error("upper_gamma_half: y >= 0 required");
  const double sqrt_y = std::sqrt(y);
  double gamma = std::sqrt(M_PI) * std::erfc(sqrt_y);  // Gamma(1/2, y)
  double ypow = sqrt_y * std::exp(-y);                 // y^{1/2} e^{-y}
  for (unsigned j = 0; j < l; ++j) {
    double a = j + 0.5;
    gamma = a * gamma + ypow;
    ypow *= y;
  }
  return gamma;
}

double kummer_1f1(double a, double b, double z) {
  if (b <= 0.0 && b == std::floor(b))
    throw std::domain_error("kummer_1f1: b must not be a non-positive integer");
  if (std::abs(z) > 50.0)
    throw std::domain_error("kummer_1f1: |z| above the supported series range (50)");
  if (z < 0.0) return std::exp(z) * kummer_1f1(b - a, b, -z);

  constexpr int kMaxTerms = 800;
  const double eps = std::numeric_limits<double>::epsilon();
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < kMaxTerms; ++j) {
    term *= (a + j) / (b + j) * z / (j + 1);
    sum += term;
    if (term == 0.0) return sum;  // terminating polynomial case
    if (j > z && std::abs(term) < 0.5 * eps * std::abs(sum)) return sum;
  }
  throw ConvergenceError("kummer_1f1: series did not converge", sum, std::abs(term));
}

}  // namespace wavecas::numerics

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wavecas::numerics {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k).
Integer binomial(unsigned n, unsigned k);

/// Bernoulli number B_m in the convention B_1 = -1/2, computed from the
/// defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 and cached.
/// Indices above 60 are rejected (std::domain_error); nothing in the mode-sum
/// expansions needs them and the exact representation grows without bound.
Rational bernoulli_number(unsigned m);

/// bernoulli_number rounded to double.
double bernoulli_number_d(unsigned m);

/// Bernoulli polynomial B_p(x) via the explicit sum
///   B_p(x) = sum_{k=0}^{p} C(p,k) B_k x^{p-k}.
double bernoulli_polynomial(unsigned p, double x);

/// 1-periodic extension B_p(x - floor(x)), the Euler-Maclaurin weight.
double periodized_bernoulli(unsigned p, double x);

/// Upper incomplete gamma Gamma(n, x) for integer order n >= 1, evaluated
/// through the exact finite sum Gamma(n,x) = (n-1)! e^{-x} sum_{l<n} x^l/l!.
double incomplete_gamma_upper(unsigned n, double x);

/// Gamma(l + 1/2, y) for integer l >= 0, via the recurrence
/// Gamma(a+1,y) = a Gamma(a,y) + y^a e^{-y} anchored at
/// Gamma(1/2, y) = sqrt(pi) erfc(sqrt(y)).  Requires y >= 0.
double upper_gamma_half(unsigned l, double y);

/// Kummer confluent hypergeometric 1F1(a; b; z) by power series with a
/// term-ratio stopping rule.  Negative arguments are routed through the
/// transformation 1F1(a;b;z) = e^z 1F1(b-a;b;-z), which keeps every series
/// term of one sign.  Supported range |z| <= 50; b must not be a
/// non-positive integer.  Non-convergence raises ConvergenceError.
double kummer_1f1(double a, double b, double z);

}  // namespace wavecas::numerics

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace wavecas::numerics {

/// Tolerance and method contract shared by every integral in the library.
struct QuadratureSpec {
  enum class Method {
    fixed_gauss,  ///< one fixed-order Gauss-Legendre rule per panel, no refinement
    adaptive,     ///< recursive bisection until the local error estimate passes
    per_period,   ///< unit-interval panel summation (periodized weights)
  };

  Method method = Method::adaptive;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
  double tail_threshold = 1e-14;  ///< semi-infinite truncation: stop when a
                                  ///< panel falls below this fraction of the sum
  int gauss_order = 15;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Computed once per order by Newton iteration on P_n and cached.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

using Fn = std::function<double(double)>;

/// Integral over the finite interval [a, b] within the spec tolerances.
/// Throws ConvergenceError (carrying the best estimate and an error bound)
/// when max_subdivisions is exhausted first.
double integrate(const Fn& f, double a, double b, const QuadratureSpec& spec = {});

/// Integral over [a, +inf) for integrably decaying f.  Panels grow
/// geometrically; accumulation stops once a full panel contributes less than
/// tail_threshold times the running value.  No variable substitution is made,
/// so integrands with non-analytic tails keep their accuracy.
double integrate_to_infinity(const Fn& f, double a, const QuadratureSpec& spec = {});

/// Integral of g(x) * B_p(x - floor(x)) / p! over [0, +inf).
/// The weight is only piecewise smooth at integers, so the quadrature runs
/// one Gauss-Legendre panel per unit interval (split further at the given
/// interior breakpoints) and truncates when a full period's contribution
/// falls below tolerance.  `start_period` skips unit intervals the caller
/// knows to be zero; `support_end`, when known, bounds the summation.
double integrate_periodized_weight(const Fn& g, unsigned p, const QuadratureSpec& spec = {},
                                   std::span<const double> breakpoints = {},
                                   long start_period = 0,
                                   std::optional<double> support_end = std::nullopt);

}  // namespace wavecas::numerics

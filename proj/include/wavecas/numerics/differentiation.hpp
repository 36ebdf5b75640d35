#pragma once

#include <functional>

namespace wavecas::numerics {

/// Controls for central-difference differentiation.
struct DiffSpec {
  int order = 1;               ///< derivative order, 1..5
  double base_step = 0.0;      ///< relative step; 0 picks a default per order
  int richardson_levels = 3;   ///< extrapolation levels over step halvings
};

/// Derivative estimate with the error indicator taken from the last
/// extrapolation-tableau correction.  `converged` is false when the tableau
/// corrections stopped shrinking, i.e. the estimate is roundoff-limited.
struct DiffResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

/// Central finite difference of the requested order with Richardson
/// extrapolation over `richardson_levels` step halvings.
DiffResult differentiate(const std::function<double(double)>& f, double x,
                         const DiffSpec& spec = {});

/// Convenience accessor for the extrapolated value.
double differentiate_value(const std::function<double(double)>& f, double x,
                           const DiffSpec& spec = {});

}  // namespace wavecas::numerics

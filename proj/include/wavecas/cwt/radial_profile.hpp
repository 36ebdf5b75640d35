#pragma once

#include <functional>
#include <optional>

#include "wavecas/numerics/quadrature.hpp"

namespace wavecas::cwt {

/// Isotropic momentum-space wavelet modulus |w~(kappa)| in d dimensions.
/// Every catalogued wavelet depends on |k| only, so the rotation average is
/// carried analytically by the unit-sphere area and no angular grid exists.
struct RadialProfile {
  int dimension = 3;                         ///< 1 or 3
  std::function<double(double)> eval;        ///< kappa >= 0 -> |w~(kappa)|
  std::optional<std::pair<double, double>> support;  ///< eval == 0 outside, when known

  double operator()(double kappa) const { return eval(kappa); }
};

/// Surface area of the unit (d-1)-sphere; d = 1 counts both half-lines.
double sphere_area(int dimension);

/// Result of the admissibility integral C_w = S_{d-1} int |w~|^2 / kappa dkappa.
struct AdmissibilityReport {
  double C_w = 0.0;
  bool converged = false;
  double lower_tail_estimate = 0.0;  ///< contribution of the innermost dyadic shell
  double upper_tail_estimate = 0.0;  ///< contribution of the last large-kappa panel
};

/// Evaluates C_w and diagnoses both ends of the integral.  A divergent
/// small-kappa behaviour raises InadmissibleWaveletError instead of
/// returning a number.
AdmissibilityReport admissibility_constant(const RadialProfile& profile,
                                           const numerics::QuadratureSpec& spec = {});

/// Cutoff function from its defining integral,
///   f~(k) = S_{d-1}/C_w * int_k^inf |w~(kappa)|^2 / kappa dkappa.
/// Numerator and denominator share the same integral, so f~(0) == 1 exactly.
double cutoff_function_numeric(const RadialProfile& profile, double k,
                               const numerics::QuadratureSpec& spec = {});

/// Same with a precomputed C_w, for callers evaluating many k against one
/// profile.
double cutoff_function_numeric(const RadialProfile& profile, double k, double C_w,
                               const numerics::QuadratureSpec& spec);

}  // namespace wavecas::cwt

#include "wavecas/cwt/radial_profile.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wavecas/common.hpp"

namespace wavecas::cwt {

using numerics::QuadratureSpec;

double sphere_area(int dimension) {
  switch (dimension) {
    case 1:
      return 2.0;
    case 3:
      return 4.0 * M_PI;
    default:
      throw std::domain_error("sphere_area: only d = 1 and d = 3 are supported");
  }
}

namespace {

// int_a^b |w~(kappa)|^2 / kappa dkappa
double shell_integral(const RadialProfile& profile, double a, double b,
                      const QuadratureSpec& spec) {
  auto integrand = [&](double kappa) {
    const double w = profile(kappa);
    return w * w / kappa;
  };
  return numerics::integrate(integrand, a, b, spec);
}

}  // namespace

AdmissibilityReport admissibility_constant(const RadialProfile& profile,
                                           const QuadratureSpec& spec) {
  double lo = 1.0;
  double hi = 1.0;
  if (profile.support) {
    lo = std::max(profile.support->first, 0.0);
    hi = profile.support->second;
    if (lo >= hi) throw std::domain_error("admissibility_constant: empty support");
    if (lo == 0.0) lo = std::min(1.0, hi / 2.0);
  }

  AdmissibilityReport report;
  double total = 0.0;

  // Small-kappa end: dyadic shells [lo/2^{j+1}, lo/2^j].  For an admissible
  // profile the shell contributions must decay; a constant-per-shell pattern
  // is the signature of a 1/kappa divergence.
  double shell_hi = lo;
  double prev_shell = std::numeric_limits<double>::infinity();
  double last_shell = 0.0;
  bool small_end_converged = false;
  for (int j = 0; j < 200; ++j) {
    const double shell_lo = shell_hi / 2.0;
    last_shell = shell_integral(profile, shell_lo, shell_hi, spec);
    total += last_shell;
    if (std::abs(last_shell) <= spec.tail_threshold * (std::abs(total) + spec.abs_tol)) {
      small_end_converged = true;
      break;
    }
    if (j >= 24 && std::abs(last_shell) > 0.9 * std::abs(prev_shell))
      throw InadmissibleWaveletError(
          "admissibility integral diverges at small momenta (shell contributions not decaying)");
    prev_shell = last_shell;
    shell_hi = shell_lo;
  }
  if (!small_end_converged)
    throw InadmissibleWaveletError("admissibility integral: small-momentum end did not converge");
  report.lower_tail_estimate = std::abs(last_shell);

  // Large-kappa end.
  if (profile.support) {
    if (hi > lo) total += shell_integral(profile, lo, hi, spec);
    report.upper_tail_estimate = 0.0;
  } else {
    auto integrand = [&](double kappa) {
      const double w = profile(kappa);
      return w * w / kappa;
    };
    const double upper = numerics::integrate_to_infinity(integrand, lo, spec);
    total += upper;
    report.upper_tail_estimate = spec.tail_threshold * std::abs(upper);
  }

  report.C_w = sphere_area(profile.dimension) * total;
  report.converged = report.C_w > 0.0 && std::isfinite(report.C_w);
  if (!report.converged)
    throw InadmissibleWaveletError("admissibility integral did not yield a positive constant");
  return report;
}

double cutoff_function_numeric(const RadialProfile& profile, double k,
                               const QuadratureSpec& spec) {
  const AdmissibilityReport full = admissibility_constant(profile, spec);
  return cutoff_function_numeric(profile, k, full.C_w, spec);
}

double cutoff_function_numeric(const RadialProfile& profile, double k, double C_w,
                               const QuadratureSpec& spec) {
  if (k < 0.0) throw std::domain_error("cutoff_function_numeric: k >= 0 required");
  if (k == 0.0) return 1.0;

  double tail;
  if (profile.support) {
    const double hi = profile.support->second;
    tail = k >= hi ? 0.0 : shell_integral(profile, k, hi, spec);
  } else {
    auto integrand = [&](double kappa) {
      const double w = profile(kappa);
      return w * w / kappa;
    };
    tail = numerics::integrate_to_infinity(integrand, k, spec);
  }
  return sphere_area(profile.dimension) * tail / C_w;
}

}  // namespace wavecas::cwt

#pragma once

#include <optional>
#include <vector>

#include "wavecas/numerics/differentiation.hpp"
#include "wavecas/numerics/quadrature.hpp"
#include "wavecas/numerics/special_functions.hpp"
#include "wavecas/wavelets/wavelet_family.hpp"

namespace wavecas::casimir {

enum class BoundaryCondition { periodic, dirichlet };
enum class Method { direct_sum, series, exact_closed_form, remainder };

/// Plate separation s, scale cutoff A and evaluation controls.  Any s, A > 0
/// is accepted for direct sums and closed forms; the near-cutoff regime
/// s ~ A is a first-class use case.  Only the asymptotic series carries an
/// A/s warning threshold.
struct CasimirConfig {
  double s = 1.0;
  double A = 1.0;
  BoundaryCondition bc = BoundaryCondition::periodic;
  Method method = Method::direct_sum;
  std::optional<long> truncation;  ///< fixed mode count; adaptive when absent
  int series_order = 3;            ///< truncation M of the expansion index m
  numerics::QuadratureSpec quad;
  numerics::DiffSpec diff{1, 0.01, 3};
};

/// Energy densities in units of length^-4.  rho == rho0 - bulk holds by
/// construction for every method.  For Dirichlet plates the mode sum carries
/// the separation-independent boundary energy -F(0;A)/2; its density
/// -F(0;A)/(2s) is reported here and removed in rho_casimir, which is the
/// quantity the force and the series expansions see.
struct EnergyResult {
  double rho0 = 0.0;
  double bulk = 0.0;
  double rho = 0.0;
  double rho_casimir = 0.0;
  double dirichlet_shift = 0.0;
  Method method = Method::direct_sum;
  long modes = 0;
  double truncation_diagnostic = 0.0;  ///< tail estimate of the last mode, relative
  bool truncation_warning = false;
  bool asymptotic_warning = false;
};

/// Expansion coefficients a_m = B_{2m+2}/(2m+2) * f~^(2m-2)(0)/(2m-2)! for
/// m = 2..M (exact rationals), plus the matching energy-series coefficients
/// B_{2m+2} 2m(2m-1) f~^(2m-2)(0)/(2m+2)!.
struct SeriesCoefficients {
  int order_M = 0;
  std::vector<numerics::Rational> a;       ///< force coefficients, index 0 <-> m = 2
  std::vector<numerics::Rational> energy;  ///< energy coefficients, same indexing
};

struct SeriesEval {
  double value = 0.0;
  bool asymptotic_warning = false;
};

/// Continuum coefficients c with F -> c/s^4 (or rho -> c/s^4) as A/s -> 0.
double continuum_force_coefficient(BoundaryCondition bc);    // -pi^2/15, -pi^2/240
double continuum_energy_coefficient(BoundaryCondition bc);   // -pi^2/45, -pi^2/720

/// M(x) = int_x^inf u^2 f~(u) du.  Closed forms: exponential
/// (x^2+2x+2)e^{-x}; Hermitian as a finite combination of half-integer
/// incomplete gammas Gamma(l+3/2, x^2).  Bump, non-analytic and custom
/// profiles integrate numerically.
double moment_integral(const wavelets::WaveletFamily& family, double x,
                       const numerics::QuadratureSpec& spec = {});

/// F(n;A) = M(2 pi n A / s) / (2 pi A^3), the transverse-momentum integral
/// of one mode band.  Real n serves the Dirichlet half-integer evaluation.
double aux_F(const wavelets::WaveletFamily& family, double n, double s, double A,
             const numerics::QuadratureSpec& spec = {});

/// Bulk energy density (1/2 pi^2) int kappa^3 f~(A kappa) dkappa, evaluated
/// by quadrature for every family.
double bulk_energy(const wavelets::WaveletFamily& family, double A,
                   const numerics::QuadratureSpec& spec = {});

/// Regularized in-plate density by direct mode summation:
/// periodic (1/s)[F(0) + 2 sum_{n>=1} F(n)], Dirichlet (1/s) sum F(n/2).
/// Only rho0 and the truncation diagnostics are populated.
EnergyResult rho0_direct(const CasimirConfig& config, const wavelets::WaveletFamily& family);

/// Renormalized density rho = rho0 - bulk through the configured method.
EnergyResult rho_renormalized(const CasimirConfig& config, const wavelets::WaveletFamily& family);

/// Exact expansion coefficients from bernoulli_number and the Taylor data of
/// the cutoff at zero.  M <= 10; custom families are limited by their
/// numeric derivative order.
SeriesCoefficients series_coefficients(const wavelets::WaveletFamily& family, int M);

/// Euler-Maclaurin series for the renormalized density / force: continuum
/// term plus the truncated sum over m = 2..M with the boundary-condition
/// prefactor and argument.  Flags a warning when the last term exceeds half
/// the previous one (asymptotic breakdown) or when A/s > 0.3.
SeriesEval rho_series(const CasimirConfig& config, const wavelets::WaveletFamily& family);
SeriesEval force_series(const CasimirConfig& config, const wavelets::WaveletFamily& family);

/// Exact rational coefficient of pi^{2m} A^{2m-2} / s^{2m+2} in the force
/// (resp. energy) series, per boundary condition.  The Dirichlet series is
/// assembled from its own prefactors, so comparing it against the periodic
/// coefficient under s -> 2s is a genuine identity check.
numerics::Rational force_series_term_coefficient(BoundaryCondition bc, int m,
                                                 const wavelets::WaveletFamily& family);
numerics::Rational energy_series_term_coefficient(BoundaryCondition bc, int m,
                                                  const wavelets::WaveletFamily& family);

/// Casimir force -d/ds [s rho(s;A)] with rho from direct mode sums and the
/// derivative from central differences.  `diag` receives the extrapolation
/// error report when given.
double force_numeric(const CasimirConfig& config, const wavelets::WaveletFamily& family,
                     numerics::DiffResult* diag = nullptr);

/// Closed forms for the exponential cutoff family (periodic plates).  For
/// pi A / s below 0.05 the renormalized forms switch to their convergent
/// small-argument expansions, where the direct difference against the bulk
/// term would cancel catastrophically.
double exact_rho0_exponential(double s, double A);
double exact_rho_exponential(double s, double A);
double exact_force_exponential(double s, double A);

/// Euler-Maclaurin remainder
///   R_4(s;A) = (2pi)^2/s^3 int_0^inf d^3/dx^3 [x^2 f~(2 pi A x / s)]
///              B_4(x - floor(x))/4! dx,
/// with the third derivative expanded analytically and the integral taken
/// per unit period.  Bump seam points are panel boundaries.
double remainder_R4(const wavelets::WaveletFamily& family, double s, double A,
                    const numerics::QuadratureSpec& spec = {});

/// rho_casimir = -pi^2/45 s^4 + (2/s) R_4 (periodic; Dirichlet through the
/// s -> 2s correspondence).
double rho_via_remainder(const wavelets::WaveletFamily& family, double s, double A,
                         BoundaryCondition bc = BoundaryCondition::periodic,
                         const numerics::QuadratureSpec& spec = {});

/// F = -pi^2/15 s^4 - 2 d/ds R_4(s;A) (periodic; Dirichlet via 2s).
double force_via_remainder(const wavelets::WaveletFamily& family, double s, double A,
                           BoundaryCondition bc = BoundaryCondition::periodic,
                           const numerics::QuadratureSpec& spec = {},
                           const numerics::DiffSpec& diff = {1, 0.01, 3});

/// One force-curve sample, dispatching on config.method.  `exact_closed_form`
/// is valid for the exponential family only.
struct ForcePoint {
  double s = 0.0;
  double force = 0.0;
  double force_continuum = 0.0;  ///< continuum reference at this separation
  double correction = 0.0;       ///< force - force_continuum
  bool warning = false;
};
ForcePoint force_point(const CasimirConfig& config, const wavelets::WaveletFamily& family);

}  // namespace wavecas::casimir

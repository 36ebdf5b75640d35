#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "wavecas/cwt/radial_profile.hpp"
#include "wavecas/numerics/quadrature.hpp"

namespace wavecas::cwt {

/// Sampling grid for the 1D transform: scales are strictly increasing and
/// positive; positions are uniform.  Rotations reduce to the reflection pair
/// for d = 1 and are folded into the admissibility constant for even
/// wavelets, so no orientation axis appears here.
struct ScaleGrid {
  Eigen::VectorXd scales;
  Eigen::VectorXd positions;

  /// Log-uniform scales (the Haar measure da/a^2 weighs small scales
  /// heavily, so log sampling keeps the reconstruction sum balanced) and
  /// uniform positions.
  static ScaleGrid log_uniform(double a_min, double a_max, int n_scales, double b_min,
                               double b_max, int n_positions);

  /// Same span with n-times the density on both axes.
  ScaleGrid refined(int factor) const;
};

/// Forward transform of a real signal under a real even wavelet given in
/// position space: coefficient(a, b) = int a^{-1/2} w((x - b)/a) phi(x) dx.
/// `signal_halfwidth` and `wavelet_halfwidth` bound the supports used to
/// clip each cell's integration interval.
Eigen::MatrixXd cwt_forward_1d(const std::function<double(double)>& signal,
                               const std::function<double(double)>& wavelet,
                               const ScaleGrid& grid, const numerics::QuadratureSpec& spec = {},
                               double signal_halfwidth = 12.0, double wavelet_halfwidth = 9.0);

/// Reconstruction from grid coefficients,
///   phi(x) ~= (2/C_w) sum_cells coeff(a,b) a^{-1/2} w((x-b)/a) dmu,
/// with dmu the trapezoid weights of da db / a^2 in log-scale coordinates.
/// The factor 2 carries the reflection orientation of even wavelets, matching
/// the both-signs convention of admissibility_constant in d = 1.
double cwt_inverse_1d(const Eigen::MatrixXd& coefficients,
                      const std::function<double(double)>& wavelet, const ScaleGrid& grid,
                      double C_w, double x);

/// Wavelet-domain inner product (2/C_w) sum phi_a(b) psi_a(b) dmu over the
/// grid; equals the L2 inner product of the signals in the dense-grid limit.
double wavelet_inner_product(const Eigen::MatrixXd& phi_coeff, const Eigen::MatrixXd& psi_coeff,
                             const ScaleGrid& grid, double C_w);

/// Scale axis with position sampling that widens with the scale.  The
/// coefficient field at scale a is band-limited to |k| of order 1/a, so a
/// position step growing like a loses nothing while letting the scale range
/// reach the very large values that carry the mean of the analysed signals
/// (the truncation error of the isometry falls off only like 1/a_max).
struct AdaptiveGridSpec {
  double a_min = 1.0 / 32.0;
  double a_max = 262144.0;
  int voices_per_octave = 6;
  double positions_per_unit = 4.0;  ///< samples per unit length at scale <= 1
  double signal_halfwidth = 12.0;
  double wavelet_halfwidth = 9.0;

  AdaptiveGridSpec refined(int factor) const {
    AdaptiveGridSpec r = *this;
    r.voices_per_octave *= factor;
    r.positions_per_unit *= factor;
    return r;
  }
};

/// Grid-evaluated isometry sum (2/C_w) sum phi_a(b) psi_a(b) da db / a^2 on
/// the scale-adapted grid; converges to the L2 inner product.
double isometry_inner_product(const std::function<double(double)>& phi,
                              const std::function<double(double)>& psi,
                              const std::function<double(double)>& wavelet, double C_w,
                              const AdaptiveGridSpec& grid = {},
                              const numerics::QuadratureSpec& spec = {});

/// Reconstruction through the same scale-adapted grid, evaluated at every
/// requested position in a single pass over the coefficients.
std::vector<double> reconstruct_scale_adapted(const std::function<double(double)>& signal,
                                              const std::function<double(double)>& wavelet,
                                              double C_w, std::span<const double> xs,
                                              const AdaptiveGridSpec& grid = {},
                                              const numerics::QuadratureSpec& spec = {});

/// Scale-limited inner product of radial momentum representations,
///   (phi, psi)_A = (2pi)^{-d} S_{d-1} int kappa^{d-1} phi(kappa) f~(A kappa) psi(kappa) dkappa,
/// with f~ evaluated from the profile's defining integral.
double scale_limited_inner_product(const std::function<double(double)>& phi_hat,
                                   const std::function<double(double)>& psi_hat, double A,
                                   const RadialProfile& profile,
                                   const numerics::QuadratureSpec& spec = {});

}  // namespace wavecas::cwt

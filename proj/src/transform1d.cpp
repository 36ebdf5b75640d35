#include "wavecas/cwt/transform1d.hpp"

#include <cmath>
#include <stdexcept>

#include "wavecas/common.hpp"

namespace wavecas::cwt {

using numerics::QuadratureSpec;

ScaleGrid ScaleGrid::log_uniform(double a_min, double a_max, int n_scales, double b_min,
                                 double b_max, int n_positions) {
  if (a_min <= 0.0 || a_max <= a_min || n_scales < 2 || n_positions < 2)
    throw std::domain_error("ScaleGrid::log_uniform: invalid grid bounds");
  ScaleGrid grid;
  grid.scales.resize(n_scales);
  const double dl = (std::log(a_max) - std::log(a_min)) / (n_scales - 1);
  for (int i = 0; i < n_scales; ++i) grid.scales[i] = std::exp(std::log(a_min) + i * dl);
  grid.positions.setLinSpaced(n_positions, b_min, b_max);
  return grid;
}

ScaleGrid ScaleGrid::refined(int factor) const {
  const int ns = static_cast<int>(scales.size());
  const int np = static_cast<int>(positions.size());
  return log_uniform(scales[0], scales[ns - 1], (ns - 1) * factor + 1, positions[0],
                     positions[np - 1], (np - 1) * factor + 1);
}

Eigen::MatrixXd cwt_forward_1d(const std::function<double(double)>& signal,
                               const std::function<double(double)>& wavelet,
                               const ScaleGrid& grid, const QuadratureSpec& spec,
                               double signal_halfwidth, double wavelet_halfwidth) {
  const auto n_scales = grid.scales.size();
  const auto n_positions = grid.positions.size();
  Eigen::MatrixXd coeff(n_scales, n_positions);
  for (Eigen::Index i = 0; i < n_scales; ++i) {
    const double a = grid.scales[i];
    const double inv_sqrt_a = 1.0 / std::sqrt(a);
    for (Eigen::Index j = 0; j < n_positions; ++j) {
      const double b = grid.positions[j];
      const double lo = std::max(-signal_halfwidth, b - a * wavelet_halfwidth);
      const double hi = std::min(signal_halfwidth, b + a * wavelet_halfwidth);
      if (lo >= hi) {
        coeff(i, j) = 0.0;
        continue;
      }
      auto integrand = [&](double x) { return inv_sqrt_a * wavelet((x - b) / a) * signal(x); };
      try {
        coeff(i, j) = numerics::integrate(integrand, lo, hi, spec);
      } catch (const ConvergenceError& e) {
        throw ConvergenceError("cwt_forward_1d: cell (a=" + std::to_string(a) +
                                   ", b=" + std::to_string(b) + "): " + e.what(),
                               e.best_estimate(), e.error_bound());
      }
    }
  }
  return coeff;
}

namespace {

// Trapezoid weights for int da/a^2 on a log-uniform scale axis: da/a^2 =
// d(ln a)/a, so the i-th weight is trap_i(dln)/a_i.
Eigen::VectorXd scale_measure_weights(const ScaleGrid& grid) {
  const auto n = grid.scales.size();
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double dl;
    if (i == 0)
      dl = 0.5 * (std::log(grid.scales[1]) - std::log(grid.scales[0]));
    else if (i == n - 1)
      dl = 0.5 * (std::log(grid.scales[n - 1]) - std::log(grid.scales[n - 2]));
    else
      dl = 0.5 * (std::log(grid.scales[i + 1]) - std::log(grid.scales[i - 1]));
    w[i] = dl / grid.scales[i];
  }
  return w;
}

double position_step(const ScaleGrid& grid) {
  return (grid.positions[grid.positions.size() - 1] - grid.positions[0]) /
         (grid.positions.size() - 1);
}

}  // namespace

double cwt_inverse_1d(const Eigen::MatrixXd& coefficients,
                      const std::function<double(double)>& wavelet, const ScaleGrid& grid,
                      double C_w, double x) {
  const Eigen::VectorXd measure = scale_measure_weights(grid);
  const double db = position_step(grid);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < grid.scales.size(); ++i) {
    const double a = grid.scales[i];
    const double inv_sqrt_a = 1.0 / std::sqrt(a);
    double row = 0.0;
    for (Eigen::Index j = 0; j < grid.positions.size(); ++j)
      row += coefficients(i, j) * wavelet((x - grid.positions[j]) / a);
    sum += measure[i] * inv_sqrt_a * row * db;
  }
  return 2.0 * sum / C_w;
}

double wavelet_inner_product(const Eigen::MatrixXd& phi_coeff, const Eigen::MatrixXd& psi_coeff,
                             const ScaleGrid& grid, double C_w) {
  if (phi_coeff.rows() != psi_coeff.rows() || phi_coeff.cols() != psi_coeff.cols())
    throw std::invalid_argument("wavelet_inner_product: coefficient shapes differ");
  const Eigen::VectorXd measure = scale_measure_weights(grid);
  const double db = position_step(grid);
  // Fixed row-major reduction so the result is identical across runs.
  double sum = 0.0;
  for (Eigen::Index i = 0; i < phi_coeff.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < phi_coeff.cols(); ++j) row += phi_coeff(i, j) * psi_coeff(i, j);
    sum += measure[i] * row * db;
  }
  return 2.0 * sum / C_w;
}

namespace {

// Shared walk over the scale-adapted grid: calls visit(a, measure_weight,
// b, db, coefficient_of_signal1) for every cell.
template <typename Visit>
void walk_adaptive_grid(const std::function<double(double)>& signal,
                        const std::function<double(double)>& wavelet,
                        const AdaptiveGridSpec& grid, const QuadratureSpec& spec, Visit&& visit) {
  const int octaves =
      static_cast<int>(std::ceil(std::log2(grid.a_max / grid.a_min) * grid.voices_per_octave));
  const double dl = std::log(2.0) / grid.voices_per_octave;
  for (int i = 0; i <= octaves; ++i) {
    const double a = grid.a_min * std::exp(i * dl);
    const double trap = (i == 0 || i == octaves) ? 0.5 : 1.0;
    const double measure = trap * dl / a;
    const double inv_sqrt_a = 1.0 / std::sqrt(a);
    const double db = std::max(1.0, a) / grid.positions_per_unit;
    const double window = grid.signal_halfwidth + grid.wavelet_halfwidth * a;
    const long n_half = static_cast<long>(std::floor(window / db));
    for (long j = -n_half; j <= n_half; ++j) {
      const double b = j * db;
      const double lo = std::max(-grid.signal_halfwidth, b - a * grid.wavelet_halfwidth);
      const double hi = std::min(grid.signal_halfwidth, b + a * grid.wavelet_halfwidth);
      if (lo >= hi) continue;
      auto integrand = [&](double x) { return inv_sqrt_a * wavelet((x - b) / a) * signal(x); };
      const double coeff = numerics::integrate(integrand, lo, hi, spec);
      visit(a, measure, b, db, coeff, inv_sqrt_a);
    }
  }
}

}  // namespace

double isometry_inner_product(const std::function<double(double)>& phi,
                              const std::function<double(double)>& psi,
                              const std::function<double(double)>& wavelet, double C_w,
                              const AdaptiveGridSpec& grid, const QuadratureSpec& spec) {
  double sum = 0.0;
  walk_adaptive_grid(phi, wavelet, grid, spec,
                     [&](double a, double measure, double b, double db, double coeff,
                         double inv_sqrt_a) {
                       const double lo = std::max(-grid.signal_halfwidth,
                                                  b - a * grid.wavelet_halfwidth);
                       const double hi =
                           std::min(grid.signal_halfwidth, b + a * grid.wavelet_halfwidth);
                       auto integrand = [&](double x) {
                         return inv_sqrt_a * wavelet((x - b) / a) * psi(x);
                       };
                       const double coeff_psi = numerics::integrate(integrand, lo, hi, spec);
                       sum += measure * db * coeff * coeff_psi;
                     });
  return 2.0 * sum / C_w;
}

std::vector<double> reconstruct_scale_adapted(const std::function<double(double)>& signal,
                                              const std::function<double(double)>& wavelet,
                                              double C_w, std::span<const double> xs,
                                              const AdaptiveGridSpec& grid,
                                              const QuadratureSpec& spec) {
  std::vector<double> sums(xs.size(), 0.0);
  walk_adaptive_grid(signal, wavelet, grid, spec,
                     [&](double a, double measure, double b, double db, double coeff,
                         double inv_sqrt_a) {
                       const double weight = measure * db * coeff * inv_sqrt_a;
                       for (std::size_t i = 0; i < xs.size(); ++i)
                         sums[i] += weight * wavelet((xs[i] - b) / a);
                     });
  for (double& v : sums) v *= 2.0 / C_w;
  return sums;
}

double scale_limited_inner_product(const std::function<double(double)>& phi_hat,
                                   const std::function<double(double)>& psi_hat, double A,
                                   const RadialProfile& profile, const QuadratureSpec& spec) {
  if (A < 0.0) throw std::domain_error("scale_limited_inner_product: A >= 0 required");
  const int d = profile.dimension;
  const double prefactor = sphere_area(d) / std::pow(2.0 * M_PI, d);
  const double C_w = A > 0.0 ? admissibility_constant(profile, spec).C_w : 0.0;
  auto integrand = [&](double kappa) {
    const double cut = A == 0.0 ? 1.0 : cutoff_function_numeric(profile, A * kappa, C_w, spec);
    return std::pow(kappa, d - 1) * phi_hat(kappa) * cut * psi_hat(kappa);
  };
  return prefactor * numerics::integrate_to_infinity(integrand, 0.0, spec);
}

}  // namespace wavecas::cwt

#include "wavecas/numerics/differentiation.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wavecas::numerics {

namespace {

// Central stencils with O(h^2) leading error, orders 1..5.
double central_difference(const std::function<double(double)>& f, double x, double h, int order) {
  switch (order) {
    case 1:
      return (f(x + h) - f(x - h)) / (2 * h);
    case 2:
      return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
    case 3:
      return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
    case 4:
      return (f(x + 2 * h) - 4 * f(x + h) + 6 * f(x) - 4 * f(x - h) + f(x - 2 * h)) /
             (h * h * h * h);
    case 5:
      return (f(x + 3 * h) - 4 * f(x + 2 * h) + 5 * f(x + h) - 5 * f(x - h) + 4 * f(x - 2 * h) -
              f(x - 3 * h)) /
             (2 * h * h * h * h * h);
    default:
      throw std::domain_error("differentiate: order must be in 1..5");
  }
}

double default_base_step(int order) {
  // Balances truncation against the h^{-order} roundoff amplification.
  constexpr std::array<double, 6> steps = {0.0, 0.02, 0.05, 0.08, 0.12, 0.2};
  return steps[order];
}

}  // namespace

DiffResult differentiate(const std::function<double(double)>& f, double x, const DiffSpec& spec) {
  if (spec.order < 1 || spec.order > 5)
    throw std::domain_error("differentiate: order must be in 1..5");
  const int levels = std::max(spec.richardson_levels, 0);
  const double rel_step = spec.base_step > 0.0 ? spec.base_step : default_base_step(spec.order);
  const double h0 = rel_step * std::max(std::abs(x), 1.0);

  // Richardson tableau in powers of h^2: T[i][j] has error O(h^{2(j+1)}).
  std::vector<std::vector<double>> tableau(levels + 1);
  DiffResult result;
  double prev_correction = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= levels; ++i) {
    const double h = h0 / std::pow(2.0, i);
    tableau[i].resize(i + 1);
    tableau[i][0] = central_difference(f, x, h, spec.order);
    double pow4 = 1.0;
    for (int j = 1; j <= i; ++j) {
      pow4 *= 4.0;
      tableau[i][j] = (pow4 * tableau[i][j - 1] - tableau[i - 1][j - 1]) / (pow4 - 1.0);
    }
    if (i > 0) {
      const double correction = std::abs(tableau[i][i] - tableau[i - 1][i - 1]);
      result.error = correction;
      if (correction > prev_correction && i == levels) result.converged = false;
      prev_correction = correction;
    }
  }
  result.value = tableau[levels][levels];
  if (levels == 0) result.error = std::abs(result.value) * 1e-6;  // no tableau to compare
  return result;
}

double differentiate_value(const std::function<double(double)>& f, double x,
                           const DiffSpec& spec) {
  return differentiate(f, x, spec).value;
}

}  // namespace wavecas::numerics

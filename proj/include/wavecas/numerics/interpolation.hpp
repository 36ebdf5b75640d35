#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wavecas::numerics {

/// Monotone cubic (Fritsch-Carlson) interpolant on a strictly increasing
/// abscissa table.  Evaluation outside the table returns 0.
class MonotoneCubic {
public:
  MonotoneCubic() = default;

  MonotoneCubic(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
      throw std::invalid_argument("MonotoneCubic: need two matching columns");
    for (std::size_t i = 1; i < n; ++i)
      if (!(x_[i] > x_[i - 1]))
        throw std::invalid_argument("MonotoneCubic: abscissae must be strictly increasing");

    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = x_[i + 1] - x_[i];
      delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    slope_.assign(n, 0.0);
    slope_[0] = delta[0];
    slope_[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (delta[i - 1] * delta[i] <= 0.0) {
        slope_[i] = 0.0;  // local extremum: flat tangent keeps monotonicity
      } else {
        // Weighted harmonic mean of the neighbouring secants.
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        slope_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
      }
    }
  }

  double operator()(double x) const {
    if (x_.empty() || x < x_.front() || x > x_.back()) return 0.0;
    // Binary search for the containing segment.
    std::size_t lo = 0, hi = x_.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (x_[mid] <= x ? lo : hi) = mid;
    }
    const double h = x_[lo + 1] - x_[lo];
    const double t = (x - x_[lo]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[lo] + h10 * h * slope_[lo] + h01 * y_[lo + 1] + h11 * h * slope_[lo + 1];
  }

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

private:
  std::vector<double> x_, y_, slope_;
};

}  // namespace wavecas::numerics

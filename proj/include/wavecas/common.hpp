#pragma once

#include <stdexcept>
#include <string>

namespace wavecas {

inline constexpr const char* kVersion = "0.1.0";

/// An iterative numeric procedure could not reach its tolerance.
/// Carries the best estimate obtained and an error bound for it, so callers
/// can decide whether the partial result is still usable.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double best_estimate, double error_bound)
      : std::runtime_error(what), best_(best_estimate), bound_(error_bound) {}

  double best_estimate() const noexcept { return best_; }
  double error_bound() const noexcept { return bound_; }

private:
  double best_;
  double bound_;
};

/// A momentum profile whose admissibility integral diverges at small momenta.
class InadmissibleWaveletError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wavecas

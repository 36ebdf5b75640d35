#include "wavecas/casimir/casimir.hpp"

#include <cmath>
#include <stdexcept>

#include "wavecas/common.hpp"

namespace wavecas::casimir {

using numerics::QuadratureSpec;
using numerics::Rational;
using wavelets::WaveletFamily;

double continuum_force_coefficient(BoundaryCondition bc) {
  return bc == BoundaryCondition::periodic ? -M_PI * M_PI / 15.0 : -M_PI * M_PI / 240.0;
}

double continuum_energy_coefficient(BoundaryCondition bc) {
  return bc == BoundaryCondition::periodic ? -M_PI * M_PI / 45.0 : -M_PI * M_PI / 720.0;
}

// ---------------------------------------------------------------------------
// Moment integral and mode sums
// ---------------------------------------------------------------------------

namespace {

// int_1^2 u^2 f~_bump(u) du, a fixed constant of the family.
double bump_band_moment(const QuadratureSpec& spec) {
  static const double value = numerics::integrate(
      [](double u) { return u * u * wavelets::cutoff(WaveletFamily::bump(), u); }, 1.0, 2.0,
      QuadratureSpec{});
  (void)spec;
  return value;
}

}  // namespace

double moment_integral(const WaveletFamily& family, double x, const QuadratureSpec& spec) {
  if (x < 0.0) throw std::domain_error("moment_integral: x >= 0 required");
  switch (family.kind()) {
    case WaveletFamily::Kind::exponential:
      return (x * x + 2.0 * x + 2.0) * std::exp(-x);
    case WaveletFamily::Kind::hermitian: {
      // int_x^inf u^{2l+2} e^{-u^2} du = Gamma(l+3/2, x^2) / 2
      const int n = family.hermitian_order();
      const double x2 = x * x;
      double inv_lfact = 1.0;
      double sum = 0.0;
      for (int l = 0; l < n; ++l) {
        if (l > 0) inv_lfact /= l;
        sum += inv_lfact * 0.5 * numerics::upper_gamma_half(l + 1, x2);
      }
      return sum;
    }
    case WaveletFamily::Kind::bump: {
      if (x >= 2.0) return 0.0;
      if (x >= 1.0)
        return numerics::integrate(
            [&](double u) { return u * u * wavelets::cutoff(family, u); }, x, 2.0, spec);
      return (1.0 - x * x * x) / 3.0 + bump_band_moment(spec);
    }
    case WaveletFamily::Kind::non_analytic:
      return numerics::integrate_to_infinity(
          [&](double u) { return u * u * wavelets::cutoff(family, u); }, x, spec);
    case WaveletFamily::Kind::custom: {
      const double hi = family.custom_support().second;
      if (x >= hi) return 0.0;
      return numerics::integrate([&](double u) { return u * u * wavelets::cutoff(family, u); },
                                 x, hi, spec);
    }
  }
  return 0.0;
}

double aux_F(const WaveletFamily& family, double n, double s, double A,
             const QuadratureSpec& spec) {
  if (A <= 0.0) throw std::domain_error("aux_F: A > 0 required (use series methods at A = 0)");
  if (s <= 0.0) throw std::domain_error("aux_F: s > 0 required");
  if (n < 0.0) n = -n;  // mode bands are even in n
  const double x = 2.0 * M_PI * n * A / s;
  return moment_integral(family, x, spec) / (2.0 * M_PI * A * A * A);
}

namespace {

struct ModeSum {
  double total = 0.0;  // F(0) + 2 sum F(n)  (periodic)  or  sum F(n/2) (Dirichlet)
  long modes = 0;
  double tail_estimate = 0.0;  // relative
  bool warning = false;
};

// Accumulates M(step*n) over modes; `step` is 2 pi A / s for periodic plates
// and pi A / s for Dirichlet ones.
ModeSum sum_modes(const WaveletFamily& family, double step, bool include_zero_mode, double weight,
                  std::optional<long> fixed_N, const QuadratureSpec& spec) {
  ModeSum result;
  double total = include_zero_mode ? moment_integral(family, 0.0, spec) : 0.0;
  double comp = 0.0;
  constexpr double kRelStop = 1e-12;
  const long cap = fixed_N ? *fixed_N : 4'000'000L;
  double term = 0.0;
  long n = 0;
  while (n < cap) {
    ++n;
    term = weight * moment_integral(family, step * n, spec);
    double y = term - comp;
    double t = total + y;
    comp = (t - total) - y;
    total = t;
    if (!fixed_N) {
      // Conservative tail factor: covers power-law decay down to ~n^-7.
      const double tail = std::abs(term) * std::max(1.0, n / 6.0);
      if (n >= 2 && tail <= kRelStop * std::abs(total)) break;
      if (term == 0.0 && n >= 1) break;  // compactly supported cutoff exhausted
    }
  }
  result.total = total;
  result.modes = n;
  result.tail_estimate =
      total != 0.0 ? std::abs(term) * std::max(1.0, n / 6.0) / std::abs(total) : 0.0;
  result.warning = fixed_N ? result.tail_estimate > 1e-9 : n >= cap;
  return result;
}

}  // namespace

EnergyResult rho0_direct(const CasimirConfig& config, const WaveletFamily& family) {
  if (config.A <= 0.0)
    throw std::domain_error("rho0_direct: A > 0 required (the unregularized sum diverges)");
  if (config.s <= 0.0) throw std::domain_error("rho0_direct: s > 0 required");
  const double alpha = 2.0 * M_PI * config.A / config.s;
  EnergyResult result;
  result.method = Method::direct_sum;
  ModeSum sum;
  if (config.bc == BoundaryCondition::periodic) {
    sum = sum_modes(family, alpha, /*include_zero_mode=*/true, 2.0, config.truncation,
                    config.quad);
  } else {
    sum = sum_modes(family, 0.5 * alpha, /*include_zero_mode=*/false, 1.0, config.truncation,
                    config.quad);
  }
  const double A3 = config.A * config.A * config.A;
  result.rho0 = sum.total / (2.0 * M_PI * A3 * config.s);
  result.modes = sum.modes;
  result.truncation_diagnostic = sum.tail_estimate;
  result.truncation_warning = sum.warning;
  if (config.bc == BoundaryCondition::dirichlet)
    result.dirichlet_shift =
        -0.5 * aux_F(family, 0.0, config.s, config.A, config.quad) / config.s;
  return result;
}

double bulk_energy(const WaveletFamily& family, double A, const QuadratureSpec& spec) {
  if (A <= 0.0) throw std::domain_error("bulk_energy: A > 0 required");
  auto integrand = [&](double u) { return u * u * u * wavelets::cutoff(family, u); };
  double J;
  switch (family.kind()) {
    case WaveletFamily::Kind::bump:
      J = 0.25 + numerics::integrate(integrand, 1.0, 2.0, spec);
      break;
    case WaveletFamily::Kind::custom:
      J = numerics::integrate(integrand, 0.0, family.custom_support().second, spec);
      break;
    default:
      J = numerics::integrate_to_infinity(integrand, 0.0, spec);
  }
  return J / (2.0 * M_PI * M_PI * A * A * A * A);
}

// ---------------------------------------------------------------------------
// Series machinery
// ---------------------------------------------------------------------------

namespace {

Rational force_coefficient_a(const WaveletFamily& family, int m) {
  // a_m = B_{2m+2}/(2m+2) * f~^(2m-2)(0)/(2m-2)!
  Rational value = numerics::bernoulli_number(2 * m + 2) / (2 * m + 2);
  value *= wavelets::derivative_at_zero_exact(family, 2 * m - 2);
  for (int i = 1; i <= 2 * m - 2; ++i) value /= i;
  return value;
}

Rational energy_coefficient_b(const WaveletFamily& family, int m) {
  // B_{2m+2} 2m(2m-1) f~^(2m-2)(0) / (2m+2)!
  Rational value = numerics::bernoulli_number(2 * m + 2) * (2 * m) * (2 * m - 1);
  value *= wavelets::derivative_at_zero_exact(family, 2 * m - 2);
  for (int i = 1; i <= 2 * m + 2; ++i) value /= i;
  return value;
}

// Double-valued coefficients; the only path open to interpolated custom
// profiles, whose Taylor data is numeric.
double force_coefficient_a_d(const WaveletFamily& family, int m) {
  if (family.kind() != WaveletFamily::Kind::custom)
    return static_cast<double>(force_coefficient_a(family, m));
  const auto derivs = wavelets::derivatives_at_zero(family, 2 * m - 2);
  double value = numerics::bernoulli_number_d(2 * m + 2) / (2 * m + 2) * derivs[2 * m - 2];
  for (int i = 1; i <= 2 * m - 2; ++i) value /= i;
  return value;
}

double energy_coefficient_b_d(const WaveletFamily& family, int m) {
  if (family.kind() != WaveletFamily::Kind::custom)
    return static_cast<double>(energy_coefficient_b(family, m));
  const auto derivs = wavelets::derivatives_at_zero(family, 2 * m - 2);
  double value =
      numerics::bernoulli_number_d(2 * m + 2) * (2 * m) * (2 * m - 1) * derivs[2 * m - 2];
  for (int i = 1; i <= 2 * m + 2; ++i) value /= i;
  return value;
}

struct SeriesTermRule {
  double prefactor;  // 8 pi^2 (periodic) or pi^2 / 2 (Dirichlet), over s^4
  double argument;   // 2 pi A / s or pi A / s
};

SeriesTermRule series_rule(const CasimirConfig& config) {
  if (config.bc == BoundaryCondition::periodic)
    return {8.0 * M_PI * M_PI, 2.0 * M_PI * config.A / config.s};
  return {0.5 * M_PI * M_PI, M_PI * config.A / config.s};
}

SeriesEval evaluate_series(const CasimirConfig& config, const WaveletFamily& family,
                           bool force) {
  if (config.s <= 0.0) throw std::domain_error("series: s > 0 required");
  if (config.series_order > 10)
    throw std::domain_error("series: M <= 10 (the expansion is asymptotic)");
  const auto rule = series_rule(config);
  const double s4 = std::pow(config.s, 4);
  const double continuum =
      (force ? continuum_force_coefficient(config.bc) : continuum_energy_coefficient(config.bc)) /
      s4;
  SeriesEval eval;
  eval.value = continuum;
  double prev_term = std::abs(continuum);
  for (int m = 2; m <= config.series_order; ++m) {
    const double c =
        force ? force_coefficient_a_d(family, m) : energy_coefficient_b_d(family, m);
    const double term = rule.prefactor / s4 * c * std::pow(rule.argument, 2 * m - 2);
    eval.value += term;
    if (std::abs(term) > 0.5 * prev_term && term != 0.0) eval.asymptotic_warning = true;
    if (term != 0.0) prev_term = std::abs(term);
  }
  if (config.A / config.s > 0.3) eval.asymptotic_warning = true;
  return eval;
}

}  // namespace

SeriesCoefficients series_coefficients(const WaveletFamily& family, int M) {
  if (M < 2) throw std::domain_error("series_coefficients: M >= 2 required");
  if (M > 10) throw std::domain_error("series_coefficients: M <= 10 (asymptotic series)");
  SeriesCoefficients coeffs;
  coeffs.order_M = M;
  for (int m = 2; m <= M; ++m) {
    coeffs.a.push_back(force_coefficient_a(family, m));
    coeffs.energy.push_back(energy_coefficient_b(family, m));
  }
  return coeffs;
}

SeriesEval rho_series(const CasimirConfig& config, const WaveletFamily& family) {
  return evaluate_series(config, family, /*force=*/false);
}

SeriesEval force_series(const CasimirConfig& config, const WaveletFamily& family) {
  return evaluate_series(config, family, /*force=*/true);
}

Rational force_series_term_coefficient(BoundaryCondition bc, int m, const WaveletFamily& family) {
  const Rational a = force_coefficient_a(family, m);
  if (bc == BoundaryCondition::periodic) {
    Rational two_pow = 1;
    for (int i = 0; i < 2 * m + 1; ++i) two_pow *= 2;
    return a * two_pow;  // 8 pi^2 * a_m * (2 pi)^{2m-2} = 2^{2m+1} a_m pi^{2m}
  }
  return a / 2;  // pi^2/2 * a_m * pi^{2m-2}
}

Rational energy_series_term_coefficient(BoundaryCondition bc, int m, const WaveletFamily& family) {
  const Rational b = energy_coefficient_b(family, m);
  if (bc == BoundaryCondition::periodic) {
    Rational two_pow = 1;
    for (int i = 0; i < 2 * m + 1; ++i) two_pow *= 2;
    return b * two_pow;
  }
  return b / 2;
}

// ---------------------------------------------------------------------------
// Exponential closed forms
// ---------------------------------------------------------------------------

namespace {

struct HyperbolicPair {
  double coth;
  double csch2;
};

HyperbolicPair stable_hyperbolics(double x) {
  if (x < 1.0) {
    const double sh = std::sinh(x);
    return {std::cosh(x) / sh, 1.0 / (sh * sh)};
  }
  const double t = std::exp(-2.0 * x);
  const double omt = 1.0 - t;
  return {(1.0 + t) / omt, 4.0 * t / (omt * omt)};
}

// (cosh 2x + 2)/sinh^4 x without large-x overflow.
double cosh_ratio(double x) {
  if (x < 1.0) {
    const double sh = std::sinh(x);
    return (std::cosh(2.0 * x) + 2.0) / (sh * sh * sh * sh);
  }
  const double t = std::exp(-2.0 * x);
  const double omt = 1.0 - t;
  return 8.0 * t * (1.0 + 4.0 * t + t * t) / (omt * omt * omt * omt);
}

constexpr double kSeriesSwitch = 0.05;  // pi A / s below this: expansion branch

// Convergent small-argument expansions of the renormalized exponential-family
// quantities; the three bulk-sized leading terms cancel analytically here, so
// no precision is lost where the closed forms would subtract to noise.
const std::vector<double>& exponential_energy_terms() {
  static const std::vector<double> terms = [] {
    std::vector<double> t;
    for (int m = 2; m <= 28; ++m) {
      Rational b = numerics::bernoulli_number(2 * m + 2) * (2 * m) * (2 * m - 1);
      for (int i = 1; i <= 2 * m + 2; ++i) b /= i;
      t.push_back(static_cast<double>(b));
    }
    return t;
  }();
  return terms;
}

const std::vector<double>& exponential_force_terms() {
  static const std::vector<double> terms = [] {
    std::vector<double> t;
    for (int m = 2; m <= 28; ++m) {
      Rational a = numerics::bernoulli_number(2 * m + 2) / (2 * m + 2);
      for (int i = 1; i <= 2 * m - 2; ++i) a /= i;
      t.push_back(static_cast<double>(a));
    }
    return t;
  }();
  return terms;
}

double exponential_series(double x, double s, bool force) {
  // (pi^2/s^4) [c0 + 8 sum_m coeff_m (2x)^{2m-2}] with every f~ derivative 1.
  const auto& coeffs = force ? exponential_force_terms() : exponential_energy_terms();
  const double c0 = force ? -1.0 / 15.0 : -1.0 / 45.0;
  const double arg2 = 4.0 * x * x;
  double sum = c0;
  double argpow = arg2;  // (2x)^{2m-2} at m = 2
  for (double c : coeffs) {
    const double term = 8.0 * c * argpow;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    argpow *= arg2;
  }
  return M_PI * M_PI / std::pow(s, 4) * sum;
}

}  // namespace

double exact_rho0_exponential(double s, double A) {
  if (s <= 0.0 || A <= 0.0) throw std::domain_error("exact_rho0_exponential: s, A > 0 required");
  const double x = M_PI * A / s;
  const auto h = stable_hyperbolics(x);
  const double A2 = A * A, A3 = A2 * A;
  return h.coth / (M_PI * A3 * s) + M_PI * h.coth * h.csch2 / (A * s * s * s) +
         h.csch2 / (A2 * s * s);
}

double exact_rho_exponential(double s, double A) {
  if (s <= 0.0 || A <= 0.0) throw std::domain_error("exact_rho_exponential: s, A > 0 required");
  const double x = M_PI * A / s;
  if (x < kSeriesSwitch) return exponential_series(x, s, /*force=*/false);
  return exact_rho0_exponential(s, A) - 3.0 / (M_PI * M_PI * A * A * A * A);
}

double exact_force_exponential(double s, double A) {
  if (s <= 0.0 || A <= 0.0) throw std::domain_error("exact_force_exponential: s, A > 0 required");
  const double x = M_PI * A / s;
  if (x < kSeriesSwitch) return exponential_series(x, s, /*force=*/true);
  return 3.0 / (M_PI * M_PI * A * A * A * A) - M_PI * M_PI * cosh_ratio(x) / std::pow(s, 4);
}

// ---------------------------------------------------------------------------
// Renormalized density and forces
// ---------------------------------------------------------------------------

EnergyResult rho_renormalized(const CasimirConfig& config, const WaveletFamily& family) {
  EnergyResult result;
  result.method = config.method;
  switch (config.method) {
    case Method::direct_sum: {
      result = rho0_direct(config, family);
      result.bulk = bulk_energy(family, config.A, config.quad);
      result.rho = result.rho0 - result.bulk;
      result.rho_casimir = result.rho - result.dirichlet_shift;
      return result;
    }
    case Method::exact_closed_form: {
      if (family.kind() != WaveletFamily::Kind::exponential)
        throw std::invalid_argument(
            "exact closed forms exist for the exponential family only");
      result.bulk = 3.0 / (M_PI * M_PI * std::pow(config.A, 4));
      if (config.bc == BoundaryCondition::periodic) {
        result.rho_casimir = exact_rho_exponential(config.s, config.A);
        result.dirichlet_shift = 0.0;
      } else {
        // Dirichlet renormalized density maps to the periodic one at 2s,
        // up to the constant boundary-energy shift.
        result.rho_casimir = exact_rho_exponential(2.0 * config.s, config.A);
        result.dirichlet_shift =
            -0.5 * aux_F(family, 0.0, config.s, config.A, config.quad) / config.s;
      }
      result.rho = result.rho_casimir + result.dirichlet_shift;
      result.rho0 = result.rho + result.bulk;
      return result;
    }
    case Method::series: {
      const SeriesEval eval = rho_series(config, family);
      result.rho_casimir = eval.value;
      result.asymptotic_warning = eval.asymptotic_warning;
      result.dirichlet_shift =
          config.bc == BoundaryCondition::dirichlet && config.A > 0.0
              ? -0.5 * aux_F(family, 0.0, config.s, config.A, config.quad) / config.s
              : 0.0;
      result.bulk = config.A > 0.0 ? bulk_energy(family, config.A, config.quad) : 0.0;
      result.rho = result.rho_casimir + result.dirichlet_shift;
      result.rho0 = result.rho + result.bulk;
      return result;
    }
    case Method::remainder: {
      result.rho_casimir = rho_via_remainder(family, config.s, config.A, config.bc, config.quad);
      result.dirichlet_shift =
          config.bc == BoundaryCondition::dirichlet
              ? -0.5 * aux_F(family, 0.0, config.s, config.A, config.quad) / config.s
              : 0.0;
      result.bulk = bulk_energy(family, config.A, config.quad);
      result.rho = result.rho_casimir + result.dirichlet_shift;
      result.rho0 = result.rho + result.bulk;
      return result;
    }
  }
  throw std::logic_error("rho_renormalized: unknown method");
}

double force_numeric(const CasimirConfig& config, const WaveletFamily& family,
                     numerics::DiffResult* diag) {
  auto s_rho = [&](double s) {
    CasimirConfig point = config;
    point.method = Method::direct_sum;
    point.s = s;
    return s * rho_renormalized(point, family).rho_casimir;
  };
  const numerics::DiffSpec diff = config.diff;
  const numerics::DiffResult d = numerics::differentiate(s_rho, config.s, diff);
  if (diag) *diag = d;
  return -d.value;
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin remainder route
// ---------------------------------------------------------------------------

namespace {

// k-space knots where the cutoff derivatives vary fastest; mapped to x units
// they keep each Gauss panel smooth on the feature scale.
std::vector<double> remainder_knots(const WaveletFamily& family) {
  std::vector<double> ks;
  switch (family.kind()) {
    case WaveletFamily::Kind::bump:
      for (double k = 1.0; k <= 2.0 + 1e-12; k += 0.05) ks.push_back(k);
      break;
    case WaveletFamily::Kind::non_analytic:
      for (double k = 0.5; k <= 1.5 + 1e-12; k += 0.05) ks.push_back(k);
      for (double k : {1.75, 2.0, 2.5, 3.0, 4.0, 5.0}) ks.push_back(k);
      break;
    case WaveletFamily::Kind::hermitian:
      for (double k = 0.5; k <= 9.5 + 1e-12; k += 0.5) ks.push_back(k);
      break;
    case WaveletFamily::Kind::exponential:
      for (int k = 1; k <= 45; ++k) ks.push_back(k);
      break;
    case WaveletFamily::Kind::custom: {
      const auto [lo, hi] = family.custom_support();
      for (int i = 0; i <= 40; ++i) ks.push_back(lo + (hi - lo) * i / 40.0);
      break;
    }
  }
  return ks;
}

}  // namespace

double remainder_R4(const WaveletFamily& family, double s, double A,
                    const QuadratureSpec& spec) {
  if (s <= 0.0) throw std::domain_error("remainder_R4: s > 0 required");
  if (A < 0.0) throw std::domain_error("remainder_R4: A >= 0 required");
  if (A == 0.0) return 0.0;  // the cutoff argument freezes at 0 and every term vanishes
  const double alpha = 2.0 * M_PI * A / s;

  // d^3/dx^3 [x^2 f~(alpha x)] expanded analytically.
  auto g = [&](double x) {
    const double k = alpha * x;
    return 6.0 * alpha * wavelets::cutoff_derivative(family, k, 1) +
           6.0 * alpha * alpha * x * wavelets::cutoff_derivative(family, k, 2) +
           alpha * alpha * alpha * x * x * wavelets::cutoff_derivative(family, k, 3);
  };

  std::vector<double> breakpoints;
  for (double k : remainder_knots(family)) breakpoints.push_back(k / alpha);

  long start_period = 0;
  std::optional<double> support_end;
  switch (family.kind()) {
    case WaveletFamily::Kind::bump:
      start_period = static_cast<long>(std::floor(1.0 / alpha));
      support_end = 2.0 / alpha;
      break;
    case WaveletFamily::Kind::non_analytic:
      // exp(-1/k^10) underflows below k ~ 0.516; everything there is exactly 0.
      start_period = static_cast<long>(std::floor(0.51 / alpha));
      break;
    case WaveletFamily::Kind::custom:
      start_period = static_cast<long>(std::floor(family.custom_support().first / alpha));
      support_end = family.custom_support().second / alpha;
      break;
    default:
      break;
  }

  const double integral =
      numerics::integrate_periodized_weight(g, 4, spec, breakpoints, start_period, support_end);
  return 4.0 * M_PI * M_PI / (s * s * s) * integral;
}

double rho_via_remainder(const WaveletFamily& family, double s, double A, BoundaryCondition bc,
                         const QuadratureSpec& spec) {
  if (bc == BoundaryCondition::dirichlet)
    return -M_PI * M_PI / (720.0 * std::pow(s, 4)) + remainder_R4(family, 2.0 * s, A, spec) / s;
  return -M_PI * M_PI / (45.0 * std::pow(s, 4)) + 2.0 / s * remainder_R4(family, s, A, spec);
}

double force_via_remainder(const WaveletFamily& family, double s, double A, BoundaryCondition bc,
                           const QuadratureSpec& spec, const numerics::DiffSpec& diff) {
  if (bc == BoundaryCondition::dirichlet)
    return force_via_remainder(family, 2.0 * s, A, BoundaryCondition::periodic, spec, diff);
  auto r4 = [&](double sv) { return remainder_R4(family, sv, A, spec); };
  const double dR4 = numerics::differentiate_value(r4, s, diff);
  return -M_PI * M_PI / (15.0 * std::pow(s, 4)) - 2.0 * dR4;
}

// ---------------------------------------------------------------------------
// Force dispatch
// ---------------------------------------------------------------------------

ForcePoint force_point(const CasimirConfig& config, const WaveletFamily& family) {
  ForcePoint point;
  point.s = config.s;
  point.force_continuum = continuum_force_coefficient(config.bc) / std::pow(config.s, 4);
  switch (config.method) {
    case Method::direct_sum: {
      numerics::DiffResult diag;
      point.force = force_numeric(config, family, &diag);
      point.warning = !diag.converged;
      break;
    }
    case Method::series: {
      const SeriesEval eval = force_series(config, family);
      point.force = eval.value;
      point.warning = eval.asymptotic_warning;
      break;
    }
    case Method::exact_closed_form: {
      if (family.kind() != WaveletFamily::Kind::exponential)
        throw std::invalid_argument("exact closed forms exist for the exponential family only");
      point.force = config.bc == BoundaryCondition::periodic
                        ? exact_force_exponential(config.s, config.A)
                        : exact_force_exponential(2.0 * config.s, config.A);
      break;
    }
    case Method::remainder:
      point.force =
          force_via_remainder(family, config.s, config.A, config.bc, config.quad, config.diff);
      break;
  }
  point.correction = point.force - point.force_continuum;
  return point;
}

}  // namespace wavecas::casimir

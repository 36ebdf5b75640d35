#include "wavecas/wavelets/wavelet_family.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wavecas/common.hpp"
#include "wavecas/numerics/interpolation.hpp"

namespace wavecas::wavelets {

using numerics::QuadratureSpec;
using numerics::Rational;

// ---------------------------------------------------------------------------
// Custom profiles: interpolated |w~|, precomputed cutoff table.
// ---------------------------------------------------------------------------

struct CustomData {
  std::string label;
  numerics::MonotoneCubic profile;
  numerics::MonotoneCubic cutoff_interp;
  double C_w = 0.0;
  double kappa_min = 0.0;
  double kappa_max = 0.0;
};

namespace {

std::shared_ptr<const CustomData> build_custom(std::string label, std::vector<double> kappa,
                                               std::vector<double> w) {
  if (kappa.size() < 4)
    throw std::invalid_argument("custom wavelet: at least 4 table rows required");
  auto data = std::make_shared<CustomData>();
  data->label = std::move(label);
  data->profile = numerics::MonotoneCubic(std::move(kappa), std::move(w));
  data->kappa_min = data->profile.x_min();
  data->kappa_max = data->profile.x_max();

  cwt::RadialProfile radial;
  radial.dimension = 3;
  radial.eval = [p = data->profile](double k) { return p(k); };
  radial.support = std::make_pair(data->kappa_min, data->kappa_max);
  const auto report = cwt::admissibility_constant(radial);
  data->C_w = report.C_w;

  // f~(k) = 4 pi / C_w * int_k^kmax |w~|^2/kappa dkappa, accumulated from the
  // top of the table so each node needs one extra segment only.
  const int kNodes = 600;
  const auto& rule = numerics::gauss_legendre(20);
  std::vector<double> ks(kNodes), fs(kNodes);
  const double lo = data->kappa_min, hi = data->kappa_max;
  for (int i = 0; i < kNodes; ++i) ks[i] = lo + (hi - lo) * i / (kNodes - 1);
  double tail = 0.0;
  fs[kNodes - 1] = 0.0;
  for (int i = kNodes - 2; i >= 0; --i) {
    const double a = ks[i], b = ks[i + 1];
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double seg = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double x = mid + half * rule.nodes[q];
      const double wv = data->profile(x);
      seg += rule.weights[q] * wv * wv / x;
    }
    tail += half * seg;
    fs[i] = 4.0 * M_PI * tail / data->C_w;
  }
  // Anchor f~ = 1 below the table support.
  std::vector<double> knots, values;
  if (lo > 0.0) {
    knots.push_back(0.0);
    values.push_back(1.0);
    if (lo > 1e-12) {
      knots.push_back(lo * (1.0 - 1e-9));
      values.push_back(1.0);
    }
  }
  knots.insert(knots.end(), ks.begin(), ks.end());
  values.insert(values.end(), fs.begin(), fs.end());
  data->cutoff_interp = numerics::MonotoneCubic(std::move(knots), std::move(values));
  return data;
}

// ---------------------------------------------------------------------------
// Hermitian family: f~_n(k) = e^{-k^2} sum_{l<n} k^{2l}/l! = Gamma(n,k^2)/(n-1)!
// ---------------------------------------------------------------------------

double hermitian_cutoff(int n, double k) {
  const double k2 = k * k;
  double term = 1.0, sum = 1.0;
  for (int l = 1; l < n; ++l) {
    term *= k2 / l;
    sum += term;
  }
  return std::exp(-k2) * sum;
}

// Derivatives follow from d/dk Gamma(n, k^2) = -2 k^{2n-1} e^{-k^2}.
double hermitian_cutoff_derivative(int n, double k, int order) {
  const double e = std::exp(-k * k);
  const double c = -2.0 / std::tgamma(static_cast<double>(n));
  switch (order) {
    case 1:
      return c * e * std::pow(k, 2 * n - 1);
    case 2:
      return c * e * std::pow(k, 2 * n - 2) * ((2 * n - 1) - 2 * k * k);
    case 3: {
      double value = -(8.0 * n - 2.0) * std::pow(k, 2 * n - 1) + 4.0 * std::pow(k, 2 * n + 1);
      if (n >= 2) value += (2.0 * n - 2.0) * (2.0 * n - 1.0) * std::pow(k, 2 * n - 3);
      return c * e * value;
    }
    default:
      throw std::domain_error("cutoff_derivative: order must be 1..3");
  }
}

// ---------------------------------------------------------------------------
// Bump family: smoothed step through the logistic of g(k) = 1/(k-1) - 1/(2-k).
// ---------------------------------------------------------------------------

double bump_cutoff(double k) {
  if (k <= 1.0) return 1.0;
  if (k >= 2.0) return 0.0;
  const double g = 1.0 / (k - 1.0) - 1.0 / (2.0 - k);
  if (g >= 0.0) {
    const double q = std::exp(-g);
    return 1.0 / (1.0 + q);
  }
  const double q = std::exp(g);
  return q / (1.0 + q);
}

double bump_cutoff_derivative(double k, int order) {
  if (k <= 1.0 || k >= 2.0) return 0.0;  // flat outside, all one-sided limits 0
  const double u = k - 1.0, v = 2.0 - k;
  const double g = 1.0 / u - 1.0 / v;
  if (std::abs(g) > 700.0) return 0.0;  // sigma(1-sigma) underflows before g' overflows
  const double q = std::exp(-std::abs(g));
  const double s1 = q / ((1.0 + q) * (1.0 + q));          // sigma (1 - sigma)
  const double sigma = g >= 0.0 ? 1.0 / (1.0 + q) : q / (1.0 + q);
  const double gp = -1.0 / (u * u) - 1.0 / (v * v);
  const double gpp = 2.0 / (u * u * u) - 2.0 / (v * v * v);
  const double gppp = -6.0 / (u * u * u * u) - 6.0 / (v * v * v * v);
  switch (order) {
    case 1:
      return s1 * gp;
    case 2:
      return s1 * ((1.0 - 2.0 * sigma) * gp * gp + gpp);
    case 3:
      return s1 * ((1.0 - 6.0 * sigma + 6.0 * sigma * sigma) * gp * gp * gp +
                   3.0 * (1.0 - 2.0 * sigma) * gp * gpp + gppp);
    default:
      throw std::domain_error("cutoff_derivative: order must be 1..3");
  }
}

// ---------------------------------------------------------------------------
// Non-analytic family: f~(k) = 1 - e^{-1/k^10}.
// ---------------------------------------------------------------------------

double non_analytic_cutoff(double k) {
  if (k == 0.0) return 1.0;
  const double h = std::pow(k, -10);
  return -std::expm1(-h);
}

double non_analytic_cutoff_derivative(double k, int order) {
  if (k == 0.0) return 0.0;
  const double h = std::pow(k, -10);
  if (h > 700.0) return 0.0;  // e^{-h} underflows; the flat tail
  const double e = std::exp(-h);
  const double hp = -10.0 * std::pow(k, -11);
  const double hpp = 110.0 * std::pow(k, -12);
  const double hppp = -1320.0 * std::pow(k, -13);
  switch (order) {
    case 1:
      return hp * e;
    case 2:
      return (hpp - hp * hp) * e;
    case 3:
      return (hppp - 3.0 * hp * hpp + hp * hp * hp) * e;
    default:
      throw std::domain_error("cutoff_derivative: order must be 1..3");
  }
}

double bump_normalization() {
  // Fixed so the equal-scale zero-shift self overlap is 1, i.e. ||w||_L2 = 1.
  static const double norm = [] {
    auto unnormalized_sq = [](double k) {
      const double u = k - 1.0, v = 2.0 - k;
      const double arg = (1.5 - k) / (u * v);
      if (std::abs(arg) > 700.0) return 0.0;
      const double ch = std::cosh(arg);
      return k * (2.0 * k * k - 6.0 * k + 5.0) / (u * u * v * v * ch * ch);
    };
    QuadratureSpec spec;
    const double I = numerics::integrate([&](double k) { return k * k * unnormalized_sq(k); },
                                         1.0, 2.0, spec);
    return std::sqrt(2.0 * M_PI * M_PI / I);
  }();
  return norm;
}

double bump_momentum_unit(double kappa) {
  if (kappa <= 1.0 || kappa >= 2.0) return 0.0;
  const double u = kappa - 1.0, v = 2.0 - kappa;
  const double arg = (1.5 - kappa) / (u * v);
  if (std::abs(arg) > 700.0) return 0.0;
  return std::sqrt(kappa * (2.0 * kappa * kappa - 6.0 * kappa + 5.0)) /
         (u * v * std::cosh(arg));
}

double sinc_j0(double z) {
  if (std::abs(z) < 1e-4) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

double sinc_j0_derivative(double z) {
  if (std::abs(z) < 1e-3) return -z / 3.0 + z * z * z / 30.0;
  return std::cos(z) / z - std::sin(z) / (z * z);
}

}  // namespace

// ---------------------------------------------------------------------------
// WaveletFamily
// ---------------------------------------------------------------------------

WaveletFamily WaveletFamily::hermitian(int n) {
  if (n < 1) throw std::invalid_argument("hermitian wavelet: order n >= 1 required");
  return WaveletFamily(Kind::hermitian, n);
}
WaveletFamily WaveletFamily::exponential() { return WaveletFamily(Kind::exponential, 1); }
WaveletFamily WaveletFamily::bump() { return WaveletFamily(Kind::bump, 1); }
WaveletFamily WaveletFamily::non_analytic() { return WaveletFamily(Kind::non_analytic, 1); }

WaveletFamily WaveletFamily::custom_from_points(std::vector<double> kappa,
                                                std::vector<double> w) {
  WaveletFamily family(Kind::custom, 1);
  family.custom_ = build_custom("custom:<points>", std::move(kappa), std::move(w));
  return family;
}

WaveletFamily WaveletFamily::custom_from_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("custom wavelet: cannot open " + path);
  std::vector<double> kappa, w;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    double k, v;
    if (!(row >> k >> v))
      throw std::invalid_argument("custom wavelet: bad row in " + path + ": " + line);
    kappa.push_back(k);
    w.push_back(v);
  }
  WaveletFamily family(Kind::custom, 1);
  family.custom_ = build_custom("custom:" + path, std::move(kappa), std::move(w));
  return family;
}

const CustomData& WaveletFamily::custom() const {
  if (!custom_) throw std::logic_error("not a custom wavelet family");
  return *custom_;
}

std::pair<double, double> WaveletFamily::custom_support() const {
  const CustomData& data = custom();
  return {data.kappa_min, data.kappa_max};
}

std::string WaveletFamily::name() const {
  switch (kind_) {
    case Kind::hermitian:
      return "hermitian:n=" + std::to_string(n_);
    case Kind::exponential:
      return "exponential";
    case Kind::bump:
      return "bump";
    case Kind::non_analytic:
      return "nonanalytic";
    case Kind::custom:
      return custom_->label;
  }
  return "?";
}

WaveletFamily parse_family_spec(const std::string& spec) {
  if (spec == "exponential") return WaveletFamily::exponential();
  if (spec == "bump") return WaveletFamily::bump();
  if (spec == "nonanalytic") return WaveletFamily::non_analytic();
  if (spec.rfind("hermitian:n=", 0) == 0) {
    const std::string num = spec.substr(12);
    std::size_t pos = 0;
    int n = 0;
    try {
      n = std::stoi(num, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad hermitian order in wavelet spec: " + spec);
    }
    if (pos != num.size() || n < 1)
      throw std::invalid_argument("bad hermitian order in wavelet spec: " + spec);
    return WaveletFamily::hermitian(n);
  }
  if (spec.rfind("custom:", 0) == 0) return WaveletFamily::custom_from_table(spec.substr(7));
  throw std::invalid_argument(
      "unknown wavelet spec '" + spec +
      "' (expected hermitian:n=<int> | exponential | bump | nonanalytic | custom:<path>)");
}

// ---------------------------------------------------------------------------
// Cutoff functions and derivatives
// ---------------------------------------------------------------------------

double cutoff(const WaveletFamily& family, double k) {
  if (k < 0.0) throw std::domain_error("cutoff: k >= 0 required");
  switch (family.kind()) {
    case WaveletFamily::Kind::hermitian:
      return hermitian_cutoff(family.hermitian_order(), k);
    case WaveletFamily::Kind::exponential:
      return std::exp(-k);
    case WaveletFamily::Kind::bump:
      return bump_cutoff(k);
    case WaveletFamily::Kind::non_analytic:
      return non_analytic_cutoff(k);
    case WaveletFamily::Kind::custom: {
      const auto& data = family.custom();
      if (k >= data.kappa_max) return 0.0;
      if (k <= data.kappa_min) return 1.0;
      return data.cutoff_interp(k);
    }
  }
  return 0.0;
}

bool bump_seam(const WaveletFamily& family, double k) {
  return family.kind() == WaveletFamily::Kind::bump && (k == 1.0 || k == 2.0);
}

double cutoff_derivative(const WaveletFamily& family, double k, int order) {
  if (k < 0.0) throw std::domain_error("cutoff_derivative: k >= 0 required");
  if (order < 1 || order > 3) throw std::domain_error("cutoff_derivative: order must be 1..3");
  switch (family.kind()) {
    case WaveletFamily::Kind::hermitian:
      return hermitian_cutoff_derivative(family.hermitian_order(), k, order);
    case WaveletFamily::Kind::exponential:
      return (order % 2 == 0 ? 1.0 : -1.0) * std::exp(-k);
    case WaveletFamily::Kind::bump:
      return bump_cutoff_derivative(k, order);
    case WaveletFamily::Kind::non_analytic:
      return non_analytic_cutoff_derivative(k, order);
    case WaveletFamily::Kind::custom: {
      numerics::DiffSpec diff;
      diff.order = order;
      diff.base_step = 0.02;
      diff.richardson_levels = 2;
      return numerics::differentiate_value([&](double x) { return cutoff(family, std::max(x, 0.0)); },
                                           k, diff);
    }
  }
  return 0.0;
}

Rational derivative_at_zero_exact(const WaveletFamily& family, int m) {
  if (m < 0) throw std::domain_error("derivative_at_zero_exact: m >= 0 required");
  switch (family.kind()) {
    case WaveletFamily::Kind::hermitian: {
      if (m == 0) return 1;
      if (m % 2 == 1) return 0;
      // Coefficient of k^{2j} in e^{-k^2} sum_{l<n} k^{2l}/l!, times (2j)!.
      const int j = m / 2;
      const int n = family.hermitian_order();
      Rational sum = 0;
      for (int l = 0; l <= std::min(j, n - 1); ++l) {
        Rational term = 1;
        for (int i = 1; i <= 2 * j; ++i) term *= i;  // (2j)!
        for (int i = 1; i <= l; ++i) term /= i;      // / l!
        for (int i = 1; i <= j - l; ++i) term /= i;  // / (j-l)!
        if ((j - l) % 2 == 1) term = -term;
        sum += term;
      }
      return sum;
    }
    case WaveletFamily::Kind::exponential:
      return m % 2 == 0 ? 1 : -1;
    case WaveletFamily::Kind::bump:
    case WaveletFamily::Kind::non_analytic:
      return m == 0 ? 1 : 0;
    case WaveletFamily::Kind::custom:
      throw std::domain_error("derivative_at_zero_exact: custom profiles have no exact Taylor data");
  }
  return 0;
}

std::vector<double> derivatives_at_zero(const WaveletFamily& family, int max_m) {
  if (max_m < 0 || max_m > 20)
    throw std::domain_error("derivatives_at_zero: 0 <= max_m <= 20 required");
  std::vector<double> result(max_m + 1, 0.0);
  if (family.kind() == WaveletFamily::Kind::custom) {
    result[0] = 1.0;
    for (int m = 1; m <= max_m; ++m) {
      if (m > 5)
        throw std::domain_error(
            "derivatives_at_zero: custom profiles support numeric orders <= 5");
      numerics::DiffSpec diff;
      diff.order = m;
      result[m] = numerics::differentiate_value(
          [&](double x) { return cutoff(family, std::abs(x)); }, 0.0, diff);
    }
    return result;
  }
  for (int m = 0; m <= max_m; ++m)
    result[m] = static_cast<double>(derivative_at_zero_exact(family, m));
  return result;
}

CutoffEvaluation evaluate_cutoff(const WaveletFamily& family, double k, int max_m) {
  CutoffEvaluation eval;
  eval.value = cutoff(family, k);
  eval.derivatives_at_zero = derivatives_at_zero(family, max_m);
  eval.source = family.kind() == WaveletFamily::Kind::custom
                    ? CutoffEvaluation::Source::numeric
                    : CutoffEvaluation::Source::closed_form;
  eval.analytic_family = family.analytic();
  eval.at_seam = bump_seam(family, k);
  return eval;
}

// ---------------------------------------------------------------------------
// Momentum and position profiles
// ---------------------------------------------------------------------------

double family_admissibility_constant(const WaveletFamily& family) {
  switch (family.kind()) {
    case WaveletFamily::Kind::hermitian: {
      const int n = family.hermitian_order();
      return 8.0 * std::pow(M_PI, 3) * std::tgamma(static_cast<double>(n)) /
             std::tgamma(n + 1.5);
    }
    case WaveletFamily::Kind::exponential:
    case WaveletFamily::Kind::non_analytic:
      return 4.0 * M_PI;
    case WaveletFamily::Kind::bump: {
      const double norm = bump_normalization();
      return 16.0 * M_PI * norm * norm;
    }
    case WaveletFamily::Kind::custom:
      return family.custom().C_w;
  }
  return 0.0;
}

double momentum_profile(const WaveletFamily& family, double kappa) {
  if (kappa < 0.0) throw std::domain_error("momentum_profile: kappa >= 0 required");
  switch (family.kind()) {
    case WaveletFamily::Kind::hermitian: {
      const int n = family.hermitian_order();
      return 2.0 * M_PI * std::pow(kappa, n) * std::exp(-0.5 * kappa * kappa) /
             std::sqrt(std::tgamma(n + 1.5));
    }
    case WaveletFamily::Kind::exponential:
      return std::sqrt(kappa) * std::exp(-0.5 * kappa);
    case WaveletFamily::Kind::bump:
      return bump_normalization() * bump_momentum_unit(kappa);
    case WaveletFamily::Kind::non_analytic: {
      if (kappa == 0.0) return 0.0;
      const double h = std::pow(kappa, -10);
      if (h > 1400.0) return 0.0;
      return std::sqrt(10.0) * std::pow(kappa, -5) * std::exp(-0.5 * h);
    }
    case WaveletFamily::Kind::custom:
      return family.custom().profile(kappa);
  }
  return 0.0;
}

cwt::RadialProfile radial_profile(const WaveletFamily& family) {
  cwt::RadialProfile profile;
  profile.dimension = 3;
  profile.eval = [family](double kappa) { return momentum_profile(family, kappa); };
  if (family.kind() == WaveletFamily::Kind::bump) profile.support = std::make_pair(1.0, 2.0);
  if (family.kind() == WaveletFamily::Kind::custom)
    profile.support = std::make_pair(family.custom().kappa_min, family.custom().kappa_max);
  return profile;
}

namespace {

// Radial inverse Fourier integral (1/2 pi^2 r) int kappa sin(kappa r) w~ dk,
// with an alternating half-period tail for oscillatory large-r evaluation.
double inverse_radial_transform(const WaveletFamily& family, double r,
                                const QuadratureSpec& spec) {
  auto w = [&](double kappa) { return momentum_profile(family, kappa); };
  if (r < 1e-6) {
    auto integrand = [&](double kappa) { return kappa * kappa * w(kappa); };
    double I;
    if (family.kind() == WaveletFamily::Kind::bump)
      I = numerics::integrate(integrand, 1.0, 2.0, spec);
    else
      I = numerics::integrate_to_infinity(integrand, 0.0, spec);
    return I / (2.0 * M_PI * M_PI);
  }

  auto integrand = [&](double kappa) { return kappa * std::sin(kappa * r) * w(kappa); };
  double I = 0.0;
  if (family.kind() == WaveletFamily::Kind::bump) {
    I = numerics::integrate(integrand, 1.0, 2.0, spec);
  } else {
    const double core_end = 2.0;
    I = numerics::integrate(integrand, 0.0, core_end, spec);
    // Alternating half-period panels for the power-law tail.
    const auto& rule = numerics::gauss_legendre(8);
    const double h = M_PI / r;
    double lo = core_end;
    bool converged = false;
    double panel = 0.0;
    for (long j = 0; j < 200000; ++j) {
      const double hi = lo + h;
      const double half = 0.5 * h, mid = 0.5 * (lo + hi);
      panel = 0.0;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q)
        panel += rule.weights[q] * integrand(mid + half * rule.nodes[q]);
      panel *= half;
      I += panel;
      if (std::abs(panel) <= spec.tail_threshold * (std::abs(I) + spec.abs_tol)) {
        converged = true;
        break;
      }
      lo = hi;
    }
    if (!converged)
      throw ConvergenceError(
          "position_profile: oscillatory inverse transform did not converge; last partial wave " +
              std::to_string(panel),
          I / (2.0 * M_PI * M_PI * r), std::abs(panel));
  }
  return I / (2.0 * M_PI * M_PI * r);
}

}  // namespace

double position_profile(const WaveletFamily& family, double r, const QuadratureSpec& spec) {
  if (r < 0.0) throw std::domain_error("position_profile: r >= 0 required");
  switch (family.kind()) {
    case WaveletFamily::Kind::hermitian: {
      const int n = family.hermitian_order();
      const double prefactor = std::pow(2.0, 0.5 * (n - 1)) * std::tgamma(0.5 * (3 + n)) /
                               std::sqrt(M_PI * std::tgamma(n + 1.5));
      return prefactor * numerics::kummer_1f1(0.5 * (3 + n), 1.5, -0.5 * r * r);
    }
    case WaveletFamily::Kind::exponential: {
      const double c = std::sqrt(3.0 / (2.0 * M_PI));
      if (r < 1e-6) return 5.0 * c;
      return c * std::sin(2.5 * std::atan(2.0 * r)) / (r * std::pow(1.0 + 4.0 * r * r, 1.25));
    }
    case WaveletFamily::Kind::bump:
    case WaveletFamily::Kind::non_analytic:
    case WaveletFamily::Kind::custom:
      return inverse_radial_transform(family, r, spec);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Bump structure: dyadic overlaps and the derivative kernel
// ---------------------------------------------------------------------------

double dyadic_overlap(const WaveletFamily& family, int j, int l, double shift,
                      const QuadratureSpec& spec) {
  if (family.kind() != WaveletFamily::Kind::bump)
    throw std::domain_error("dyadic_overlap: defined for the bump family only");
  if (std::abs(j) > 6 || std::abs(l) > 6)
    throw std::domain_error("dyadic_overlap: |j|, |l| <= 6 required");
  if (shift < 0.0) throw std::domain_error("dyadic_overlap: shift >= 0 required");
  const double aj = std::pow(2.0, j), al = std::pow(2.0, l);
  // w(x/2^j) has momentum support kappa in [2^-j, 2^{1-j}].
  const double lo = std::max(1.0 / aj, 1.0 / al);
  const double hi = std::min(2.0 / aj, 2.0 / al);
  if (lo >= hi) return 0.0;
  auto integrand = [&](double kappa) {
    return kappa * kappa * momentum_profile(family, aj * kappa) *
           momentum_profile(family, al * kappa) * sinc_j0(kappa * shift);
  };
  const double dilation = std::pow(aj * al, 3);
  return dilation / (2.0 * M_PI * M_PI) * numerics::integrate(integrand, lo, hi, spec);
}

std::vector<double> derivative_kernel_magnitudes(const WaveletFamily& family, double a,
                                                 double a_prime, std::span<const double> r_values,
                                                 const QuadratureSpec& spec) {
  if (family.kind() != WaveletFamily::Kind::bump)
    throw std::domain_error("derivative_kernel_magnitudes: defined for the bump family only");
  if (a <= 0.0 || a_prime <= 0.0)
    throw std::domain_error("derivative_kernel_magnitudes: scales must be positive");
  const double lo = std::max(1.0 / a, 1.0 / a_prime);
  const double hi = std::min(2.0 / a, 2.0 / a_prime);
  std::vector<double> magnitudes;
  magnitudes.reserve(r_values.size());
  const double dilation = std::pow(a * a_prime, 3);
  for (double r : r_values) {
    if (lo >= hi) {
      magnitudes.push_back(0.0);
      continue;
    }
    auto integrand = [&](double kappa) {
      return kappa * kappa * kappa * momentum_profile(family, a * kappa) *
             momentum_profile(family, a_prime * kappa) * sinc_j0_derivative(kappa * r);
    };
    // Fixed oscillation-resolving panels keep the evaluation deterministic
    // and smooth in r.
    const int panels = std::max(8, static_cast<int>(std::ceil((hi - lo) * r / 3.0)));
    const auto& rule = numerics::gauss_legendre(16);
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double pa = lo + (hi - lo) * p / panels;
      const double pb = lo + (hi - lo) * (p + 1) / panels;
      const double half = 0.5 * (pb - pa), mid = 0.5 * (pa + pb);
      double panel = 0.0;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q)
        panel += rule.weights[q] * integrand(mid + half * rule.nodes[q]);
      sum += half * panel;
    }
    magnitudes.push_back(std::abs(dilation / (2.0 * M_PI * M_PI) * sum));
  }
  (void)spec;
  return magnitudes;
}

}  // namespace wavecas::wavelets

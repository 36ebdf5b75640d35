#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wavecas/common.hpp"
#include "wavecas/cwt/radial_profile.hpp"
#include "wavecas/cwt/transform1d.hpp"
#include "wavecas/numerics/differentiation.hpp"

using namespace wavecas;
using cwt::RadialProfile;
using cwt::ScaleGrid;

namespace {

RadialProfile exponential_profile_d3() {
  return {3, [](double k) { return std::sqrt(k) * std::exp(-0.5 * k); }, std::nullopt};
}

RadialProfile hermitian1_profile_d3() {
  return {3, [](double k) { return k * std::exp(-0.5 * k * k); }, std::nullopt};
}

// Mexican hat (second Hermitian wavelet, d = 1) and its Fourier modulus.
double mexican_hat(double x) { return (1.0 - x * x) * std::exp(-0.5 * x * x); }

RadialProfile mexican_hat_profile_d1() {
  return {1, [](double k) { return std::sqrt(2.0 * M_PI) * k * k * std::exp(-0.5 * k * k); },
          std::nullopt};
}

}  // namespace

TEST_CASE("admissibility constants of the catalogue profiles") {
  // 4 pi int e^{-k} dk = 4 pi
  const auto exp_report = cwt::admissibility_constant(exponential_profile_d3());
  CHECK(exp_report.converged);
  CHECK(exp_report.C_w == doctest::Approx(4.0 * M_PI).epsilon(1e-9));

  // 4 pi int k e^{-k^2} dk = 2 pi
  const auto herm_report = cwt::admissibility_constant(hermitian1_profile_d3());
  CHECK(herm_report.C_w == doctest::Approx(2.0 * M_PI).epsilon(1e-9));

  // d = 1 mexican hat: 2 int 2 pi k^3 e^{-k^2} dk = 2 pi
  const auto mh_report = cwt::admissibility_constant(mexican_hat_profile_d1());
  CHECK(mh_report.C_w == doctest::Approx(2.0 * M_PI).epsilon(1e-9));
  CHECK(mh_report.lower_tail_estimate <= 1e-10 * mh_report.C_w);
}

TEST_CASE("a profile flat at the origin is inadmissible") {
  RadialProfile flat{3, [](double k) { return std::exp(-k); }, std::nullopt};
  CHECK_THROWS_AS(cwt::admissibility_constant(flat), InadmissibleWaveletError);
}

TEST_CASE("cutoff function from the defining integral") {
  const auto herm = hermitian1_profile_d3();
  CHECK(cwt::cutoff_function_numeric(herm, 0.0) == 1.0);  // exact by construction
  // Matches Gamma(1, k^2) = e^{-k^2}.
  CHECK(cwt::cutoff_function_numeric(herm, 1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
  const auto expf = exponential_profile_d3();
  CHECK(cwt::cutoff_function_numeric(expf, 2.0) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
}

TEST_CASE("numeric cutoff is monotone, normalized and vanishing") {
  for (const auto& profile : {hermitian1_profile_d3(), exponential_profile_d3()}) {
    const double C_w = cwt::admissibility_constant(profile).C_w;
    double prev = 1.0 + 1e-15;
    for (int i = 0; i <= 15; ++i) {
      const double k = 6.0 * i / 15.0;
      const double f = cwt::cutoff_function_numeric(profile, k, C_w, {});
      CHECK(f <= prev + 1e-12);
      prev = f;
    }
    CHECK(prev < 5e-3);
  }
}

TEST_CASE("cutoff derivative identity df/dk = -S |w(k)|^2 / (C_w k)") {
  const auto profile = hermitian1_profile_d3();
  const double C_w = cwt::admissibility_constant(profile).C_w;
  for (double k : {0.5, 1.0, 2.0}) {
    const double lhs = numerics::differentiate_value(
        [&](double kk) { return cwt::cutoff_function_numeric(profile, kk, C_w, {}); }, k,
        {1, 0.02, 3});
    const double w = profile(k);
    const double rhs = -cwt::sphere_area(3) * w * w / (C_w * k);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
  }
}

TEST_CASE("scale covariance of the cutoff") {
  const auto base = hermitian1_profile_d3();
  RadialProfile dilated{3, [](double k) { return 2.0 * k * std::exp(-0.5 * 4.0 * k * k); },
                        std::nullopt};
  const double Cb = cwt::admissibility_constant(base).C_w;
  const double Cd = cwt::admissibility_constant(dilated).C_w;
  for (double k : {0.3, 0.8, 1.4}) {
    CHECK(cwt::cutoff_function_numeric(dilated, k, Cd, {}) ==
          doctest::Approx(cwt::cutoff_function_numeric(base, 2.0 * k, Cb, {})).epsilon(1e-8));
  }
}

TEST_CASE("forward transform basics") {
  const auto grid = ScaleGrid::log_uniform(0.5, 2.0, 3, -1.0, 1.0, 3);

  const auto zeros = cwt::cwt_forward_1d([](double) { return 0.0; }, mexican_hat, grid);
  CHECK(zeros.cwiseAbs().maxCoeff() == 0.0);

  // Self inner product at a = 1, b = 0: ||w||^2 = (3/4) sqrt(pi).
  const auto self = cwt::cwt_forward_1d(mexican_hat, mexican_hat, grid);
  CHECK(self(1, 1) == doctest::Approx(0.75 * std::sqrt(M_PI)).epsilon(1e-10));

  // Unit gaussian against the mexican hat: int (1-x^2) e^{-x^2} dx = sqrt(pi)/2.
  const auto gauss = cwt::cwt_forward_1d([](double x) { return std::exp(-0.5 * x * x); },
                                         mexican_hat, grid);
  CHECK(gauss(1, 1) == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-10));
}

TEST_CASE("round-trip reconstruction") {
  const double C_w = 2.0 * M_PI;

  // Mean-zero signal on a rectangular grid: every truncation tail is steep,
  // so this pins the reconstruction constant sharply.
  {
    const auto grid = ScaleGrid::log_uniform(1.0 / 32.0, 32.0, 81, -12.0, 12.0, 121);
    auto signal = [](double x) { return mexican_hat(x - 0.4); };
    const auto coeff = cwt::cwt_forward_1d(signal, mexican_hat, grid);
    double sup = 0.0;
    for (int i = -6; i <= 6; ++i) {
      const double x = 0.5 * i;
      sup = std::max(sup, std::abs(cwt::cwt_inverse_1d(coeff, mexican_hat, grid, C_w, x) -
                                   signal(x)));
    }
    CHECK(sup < 1e-3);

    const auto zero_coeff = cwt::cwt_forward_1d([](double) { return 0.0; }, mexican_hat, grid);
    CHECK(cwt::cwt_inverse_1d(zero_coeff, mexican_hat, grid, C_w, 0.3) == 0.0);
  }

  // A unit gaussian carries mean content up to scales ~ a_max: truncating at
  // a_max = 64 leaves a floor (1/2pi) int phi^ f~(64 k) dk ~ 1.7e-2 however
  // fine the sampling, so the rectangular-grid error is pinned near it.
  {
    const auto grid = ScaleGrid::log_uniform(1.0 / 64.0, 64.0, 111, -12.0, 12.0, 121);
    auto gaussian = [](double x) { return std::exp(-0.5 * x * x); };
    const auto coeff = cwt::cwt_forward_1d(gaussian, mexican_hat, grid);
    double sup = 0.0;
    for (int i = -6; i <= 6; ++i) {
      const double x = 0.5 * i;
      sup = std::max(sup, std::abs(cwt::cwt_inverse_1d(coeff, mexican_hat, grid, C_w, x) -
                                   gaussian(x)));
    }
    CHECK(sup < 3e-2);
  }

  // The scale-adapted grid reaches those scales cheaply and recovers the
  // gaussian to the tolerance the rectangular span cannot.
  {
    cwt::AdaptiveGridSpec grid;
    grid.voices_per_octave = 8;
    grid.positions_per_unit = 5.0;
    auto gaussian = [](double x) { return std::exp(-0.5 * x * x); };
    std::vector<double> xs;
    for (int i = -6; i <= 6; ++i) xs.push_back(0.5 * i);
    const auto rec = cwt::reconstruct_scale_adapted(gaussian, mexican_hat, C_w, xs, grid);
    double sup = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      sup = std::max(sup, std::abs(rec[i] - gaussian(xs[i])));
    CHECK(sup < 1e-3);

    // Translation covariance.
    auto shifted = [](double x) { return std::exp(-0.5 * (x - 0.7) * (x - 0.7)); };
    const auto rec2 = cwt::reconstruct_scale_adapted(shifted, mexican_hat, C_w, xs, grid);
    sup = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      sup = std::max(sup, std::abs(rec2[i] - shifted(xs[i])));
    CHECK(sup < 1e-3);
  }
}

TEST_CASE("parseval: wavelet-domain inner product reproduces L2") {
  const double C_w = 2.0 * M_PI;
  auto phi = [](double x) { return std::exp(-0.5 * x * x); };
  auto psi = [](double x) { return std::exp(-0.5 * (x - 0.3) * (x - 0.3)); };
  const double exact = std::sqrt(M_PI) * std::exp(-0.3 * 0.3 / 4.0);

  cwt::AdaptiveGridSpec grid;
  grid.voices_per_octave = 4;
  grid.positions_per_unit = 3.0;
  double prev_err = 1.0;
  for (int level = 0; level < 3; ++level) {
    const double approx = cwt::isometry_inner_product(phi, psi, mexican_hat, C_w, grid);
    const double err = std::abs(approx - exact) / std::abs(exact);
    if (level == 0) CHECK(err < 1e-3);
    if (level > 0) CHECK(err < prev_err);
    prev_err = err;
    grid = grid.refined(2);
  }
}

TEST_CASE("scale-limited inner product") {
  auto gauss_hat = [](double k) { return std::exp(-0.5 * k * k); };
  RadialProfile exp_d1{1, [](double k) { return std::sqrt(k) * std::exp(-0.5 * k); },
                       std::nullopt};

  // A = 0 reduces to the ordinary inner product (1/pi) int_0^inf e^{-k^2} dk.
  const double plain = cwt::scale_limited_inner_product(gauss_hat, gauss_hat, 0.0, exp_d1);
  CHECK(plain == doctest::Approx(0.5 / std::sqrt(M_PI)).epsilon(1e-10));

  // A = 1 with f~ = e^{-k}: (1/pi) int e^{-k^2-k} dk = e^{1/4} sqrt(pi) erfc(1/2) / (2 pi).
  const double cut = cwt::scale_limited_inner_product(gauss_hat, gauss_hat, 1.0, exp_d1);
  const double exact = std::exp(0.25) * 0.5 * std::sqrt(M_PI) * std::erfc(0.5) / M_PI;
  CHECK(cut == doctest::Approx(exact).epsilon(1e-8));

  // Monotone in A for non-negative inputs.
  const double cut2 = cwt::scale_limited_inner_product(gauss_hat, gauss_hat, 2.0, exp_d1);
  CHECK(cut2 <= cut);
  CHECK(cut <= plain);
}

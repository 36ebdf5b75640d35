#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wavecas/cwt/radial_profile.hpp"
#include "wavecas/numerics/differentiation.hpp"
#include "wavecas/numerics/quadrature.hpp"
#include "wavecas/numerics/special_functions.hpp"

namespace wavecas::wavelets {

struct CustomData;

/// One isotropic wavelet family, identified by the cutoff function it
/// induces.  Value object: cheap to copy, immutable, safe to share across
/// threads.
///
/// Momentum profiles are defined from the cutoff function through the
/// admissibility identity |w~(kappa)|^2 = -C_w kappa f~'(kappa) / (4 pi)
/// (d = 3), which makes catalogue profiles and cutoffs consistent by
/// construction.  Published profile tables that state the cutoff separately
/// can differ from this by an exponent-halving convention; the cutoff
/// function is the authoritative object here.
class WaveletFamily {
public:
  enum class Kind { hermitian, exponential, bump, non_analytic, custom };

  static WaveletFamily hermitian(int n);
  static WaveletFamily exponential();
  static WaveletFamily bump();
  static WaveletFamily non_analytic();
  /// Two-column table (kappa, |w~(kappa)|), monotone-cubic interpolated.
  static WaveletFamily custom_from_table(const std::string& path);
  static WaveletFamily custom_from_points(std::vector<double> kappa, std::vector<double> w);

  Kind kind() const { return kind_; }
  int hermitian_order() const { return n_; }
  bool analytic() const { return kind_ == Kind::hermitian || kind_ == Kind::exponential; }
  std::string name() const;

  /// Momentum support [kappa_min, kappa_max] of a custom profile table.
  std::pair<double, double> custom_support() const;

  const CustomData& custom() const;

private:
  WaveletFamily(Kind kind, int n) : kind_(kind), n_(n) {}
  Kind kind_;
  int n_ = 1;
  std::shared_ptr<const CustomData> custom_;
};

/// Parses the CLI mini-grammar: hermitian:n=<int> | exponential | bump |
/// nonanalytic | custom:<path>.  Throws std::invalid_argument on bad specs.
WaveletFamily parse_family_spec(const std::string& spec);

/// Cutoff function f~(k), closed form per family (numeric for custom).
double cutoff(const WaveletFamily& family, double k);

/// Analytic derivative of the cutoff, orders 1..3.  At the bump seam points
/// k = 1, 2 every one-sided derivative vanishes by smooth flatness and the
/// two-sided limit 0 is returned; bump_seam() flags those k exactly.
double cutoff_derivative(const WaveletFamily& family, double k, int order);
bool bump_seam(const WaveletFamily& family, double k);

/// f~^(m)(0) for m = 0..max_m from the Taylor expansion of each family.
std::vector<double> derivatives_at_zero(const WaveletFamily& family, int max_m);

/// Exact rational f~^(m)(0) (analytic families and the flat families; custom
/// profiles have no exact Taylor data and are rejected).
numerics::Rational derivative_at_zero_exact(const WaveletFamily& family, int m);

/// Cutoff value together with the low-order Taylor data and provenance.
struct CutoffEvaluation {
  double value = 0.0;
  std::vector<double> derivatives_at_zero;
  enum class Source { closed_form, numeric } source = Source::closed_form;
  bool analytic_family = false;
  bool at_seam = false;
};
CutoffEvaluation evaluate_cutoff(const WaveletFamily& family, double k, int max_m = 4);

/// Modulus of the momentum-space wavelet, normalized so that the family's
/// admissibility constant equals family_admissibility_constant().
double momentum_profile(const WaveletFamily& family, double kappa);
double family_admissibility_constant(const WaveletFamily& family);

/// The d = 3 radial profile backing the family, for the transform machinery.
cwt::RadialProfile radial_profile(const WaveletFamily& family);

/// Position-space radial cross-section.  Hermitian and exponential families
/// use their closed forms; bump and non-analytic go through the numeric
/// inverse Fourier integral w(r) = (1/2 pi^2 r) int kappa sin(kappa r)
/// w~(kappa) dkappa.
double position_profile(const WaveletFamily& family, double r,
                        const numerics::QuadratureSpec& spec = {});

/// Overlap of two dyadically dilated bump wavelets at translation distance
/// `shift`, evaluated in momentum space over the band intersection.  The
/// bands [2^-j, 2^{1-j}] are disjoint for j != l, so cross-scale overlaps
/// vanish for every shift; the self overlap at zero shift is normalized to 1.
double dyadic_overlap(const WaveletFamily& family, int j, int l, double shift,
                      const numerics::QuadratureSpec& spec = {});

/// |dC/dr| of the cross-correlation C(r) of two dilated bump wavelets (the
/// radial reduction of the derivative kernel), at each requested r.
std::vector<double> derivative_kernel_magnitudes(const WaveletFamily& family, double a,
                                                 double a_prime, std::span<const double> r_values,
                                                 const numerics::QuadratureSpec& spec = {});

}  // namespace wavecas::wavelets

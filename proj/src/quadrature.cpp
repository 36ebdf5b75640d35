#include "wavecas/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "wavecas/common.hpp"
#include "wavecas/numerics/special_functions.hpp"

namespace wavecas::numerics {

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n with the Chebyshev-angle initial guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double gauss_panel(const Fn& f, double a, double b, const GaussRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

struct AdaptiveState {
  const Fn& f;
  const GaussRule& rule;
  double abs_tol;
  double rel_tol;
  int budget;  // remaining subdivisions
  double root_width;
  double running_total;  // coarse running estimate for the relative test
};

double adaptive_recurse(AdaptiveState& st, double a, double b, double whole, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gauss_panel(st.f, a, mid, st.rule);
  const double right = gauss_panel(st.f, mid, b, st.rule);
  const double refined = left + right;
  const double err = std::abs(refined - whole);
  const double scale = std::max(st.abs_tol, st.rel_tol * std::abs(st.running_total));
  const double local_tol = scale * std::max((b - a) / st.root_width, 1e-3);
  if (err <= local_tol || depth > 60) return refined;
  if (st.budget <= 0)
    throw ConvergenceError("integrate: subdivision budget exhausted", refined, err);
  st.budget -= 2;
  st.running_total += refined - whole;
  return adaptive_recurse(st, a, mid, left, depth + 1) +
         adaptive_recurse(st, mid, b, right, depth + 1);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 2 || n > 128) throw std::domain_error("gauss_legendre: order out of range");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

double integrate(const Fn& f, double a, double b, const QuadratureSpec& spec) {
  if (a == b) return 0.0;
  const GaussRule& rule = gauss_legendre(spec.gauss_order);
  if (spec.method == QuadratureSpec::Method::fixed_gauss) return gauss_panel(f, a, b, rule);
  AdaptiveState st{f, rule, spec.abs_tol, spec.rel_tol, spec.max_subdivisions, std::abs(b - a), 0.0};
  const double whole = gauss_panel(f, a, b, rule);
  st.running_total = whole;
  return adaptive_recurse(st, a, b, whole, 0);
}

double integrate_to_infinity(const Fn& f, double a, const QuadratureSpec& spec) {
  // Geometric panel growth: [a, a+w], [a+w, a+3w], ... with doubling width.
  double width = std::max(1.0, 0.5 * std::abs(a));
  double lo = a;
  double total = 0.0;
  double comp = 0.0;  // Kahan carry
  int consecutive_small = 0;
  for (int panel = 0; panel < 80; ++panel) {
    const double hi = lo + width;
    const double piece = integrate(f, lo, hi, spec);
    double y = piece - comp;
    double t = total + y;
    comp = (t - total) - y;
    total = t;
    if (std::abs(piece) <= spec.tail_threshold * (std::abs(total) + spec.abs_tol)) {
      if (++consecutive_small >= 2) return total;
    } else {
      consecutive_small = 0;
    }
    lo = hi;
    width *= 2.0;
  }
  throw ConvergenceError("integrate_to_infinity: tail did not fall below threshold", total,
                         std::abs(total) * spec.tail_threshold);
}

double integrate_periodized_weight(const Fn& g, unsigned p, const QuadratureSpec& spec,
                                   std::span<const double> breakpoints, long start_period,
                                   std::optional<double> support_end) {
  if (p == 0) throw std::domain_error("integrate_periodized_weight: p >= 1 required");
  const GaussRule& rule = gauss_legendre(std::max(spec.gauss_order, 20));
  const double inv_pfact = 1.0 / std::tgamma(static_cast<double>(p) + 1.0);

  std::vector<double> cuts(breakpoints.begin(), breakpoints.end());
  std::sort(cuts.begin(), cuts.end());

  long max_periods = start_period + spec.max_subdivisions;
  if (support_end) max_periods = std::min<long>(max_periods, static_cast<long>(std::ceil(*support_end)) + 1);

  double total = 0.0;
  double comp = 0.0;
  int consecutive_small = 0;
  bool seen_nonzero = false;
  double last_period = 0.0;
  for (long k = std::max<long>(start_period, 0); k < max_periods; ++k) {
    const double lo = static_cast<double>(k);
    const double hi = lo + 1.0;
    // Segment the unit interval at any interior breakpoints; B_p({x}) is a
    // fixed polynomial inside, so a single rule per smooth segment suffices.
    double seg_lo = lo;
    double period_sum = 0.0;
    auto weighted = [&](double x) { return g(x) * bernoulli_polynomial(p, x - lo) * inv_pfact; };
    for (double c : cuts) {
      if (c > seg_lo && c < hi) {
        period_sum += gauss_panel(weighted, seg_lo, c, rule);
        seg_lo = c;
      }
    }
    period_sum += gauss_panel(weighted, seg_lo, hi, rule);

    double y = period_sum - comp;
    double t = total + y;
    comp = (t - total) - y;
    total = t;
    last_period = period_sum;
    if (period_sum != 0.0) seen_nonzero = true;

    if (support_end) continue;  // bounds are exact, no tail logic needed
    if (std::abs(period_sum) <= spec.tail_threshold * (std::abs(total) + spec.abs_tol)) {
      ++consecutive_small;
      if (consecutive_small >= 3 && seen_nonzero) return total;
      // A long run of exact zeros past the caller-declared support start is
      // taken to mean the integrand really is zero.
      if (consecutive_small >= 64 && !seen_nonzero) return total;
    } else {
      consecutive_small = 0;
    }
  }
  if (support_end) return total;
  throw ConvergenceError("integrate_periodized_weight: integrand decays too slowly; last period " +
                             std::to_string(last_period),
                         total, std::abs(last_period));
}

}  // namespace wavecas::numerics

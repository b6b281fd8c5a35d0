#include "relaysec/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "relaysec/numeric.hpp"

namespace relaysec {

double lower_incomplete_gamma_2(double x) {
  // -expm1(-x) = 1 - e^(-x) keeps precision for small x, where the result
  // behaves like x^2/2.
  return -std::expm1(-x) - x * std::exp(-x);
}

double power_outage_from_means(double p1_mu1, double p2_mu2, double theta) {
  if (theta <= 0.0) return 0.0;
  if (nearly_equal_rel(p1_mu1, p2_mu2)) {
    const double mean = 0.5 * (p1_mu1 + p2_mu2);
    return lower_incomplete_gamma_2(theta / mean);
  }
  const double a = p1_mu1;
  const double b = p2_mu2;
  return 1.0 - b / (b - a) * std::exp(-theta / b) + a / (b - a) * std::exp(-theta / a);
}

double power_outage(const OutageInputs& inp) {
  return power_outage_from_means(1.0 / inp.m_x, 1.0 / inp.m_y, inp.theta);
}

double expected_inverse_sum(double mu_r, double mu_s) {
  if (nearly_equal_rel(mu_r, mu_s)) {
    return 2.0 / (mu_r + mu_s);
  }
  // ln(mu_r/mu_s)/(mu_r - mu_s) via log1p, stable arbitrarily close to
  // equality.
  const double d = mu_r - mu_s;
  return std::log1p(d / mu_s) / d;
}

LowerBoundReport essr_lower_bound(const SystemParams& p, const MeanGains& g) {
  p.validate();
  g.validate();

  LowerBoundReport rep{};
  rep.e_h = expected_inverse_sum(p.p_s1_w * g.mu_s1r, p.p_s2_w * g.mu_s2r);
  rep.p_por = power_outage_from_means(p.p_s1_w * g.mu_s1r, p.p_s2_w * g.mu_s2r, p.theta_r_w);
  rep.p_poj =
      p.jamming ? power_outage_from_means(p.p_s1_w * g.mu_s1j, p.p_s2_w * g.mu_s2j, p.theta_j_w)
                : 0.0;

  const double eta_j = p.jamming ? p.eta_j : 0.0;
  const double one_minus_alpha = 1.0 - p.alpha;
  const double c = 2.0 * p.eta_r * p.alpha;
  const double cn0 = c * p.n0_w;
  const double mu_prod = g.mu_s2r * g.mu_s1r;
  const double p_mu_j = p.p_s1_w * g.mu_s1j + p.p_s2_w * g.mu_s2j;
  // Mean of the power the relay wastes forwarding the jamming signal.
  const double jam = 2.0 * p.n0_w * eta_j * p.alpha * g.mu_rj * p_mu_j * rep.e_h;
  const double noise = p.n0_w * one_minus_alpha;

  rep.t1 = std::log1p(c * p.p_s1_w * mu_prod / (cn0 * g.mu_s2r + noise + jam));
  rep.t2 = std::log1p(c * p.p_s2_w * mu_prod / (cn0 * g.mu_s1r + noise + jam));
  rep.t3 = std::log1p((p.p_s1_w * g.mu_s1r + p.p_s2_w * g.mu_s2r) /
                      (2.0 * eta_j * p.alpha / one_minus_alpha * p_mu_j * g.mu_rj + p.n0_w));

  const double bracket = std::max(rep.t1 + rep.t2 - rep.t3, 0.0);
  rep.r_lb = (1.0 - rep.p_poj) * (1.0 - rep.p_por) * one_minus_alpha / (2.0 * std::numbers::ln2) *
             bracket;
  return rep;
}

}  // namespace relaysec

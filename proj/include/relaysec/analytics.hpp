#pragma once

#include "relaysec/params.hpp"

namespace relaysec {

// Rate parameterization of the two summed exponentials and the activation
// threshold the sum is tested against.
struct OutageInputs {
  double m_x;    // 1/(P_S1 mu_1), inverse watts
  double m_y;    // 1/(P_S2 mu_2), inverse watts
  double theta;  // watts
};

// Closed-form pieces of the ergodic secrecy sum rate lower bound.
struct LowerBoundReport {
  double t1;     // nats, S2-direction log term
  double t2;     // nats, S1-direction log term
  double t3;     // nats, relay leakage log term
  double e_h;    // E{1/(P_S1 X + P_S2 Y)}, inverse watts
  double p_por;  // relay power outage probability
  double p_poj;  // jammer power outage probability (0 when no jammer)
  double r_lb;   // bits/s/Hz
};

// Regularized lower incomplete gamma at s = 2: 1 - e^(-x)(1+x).
double lower_incomplete_gamma_2(double x);

// P(sum of the two received components < theta). Evaluated in the
// mean-parameterized form (products P*mu) to avoid cancellation when the
// means are large.
double power_outage(const OutageInputs& inp);
double power_outage_from_means(double p1_mu1, double p2_mu2, double theta);

// E{1/(R+S)} for independent exponentials with means mu_r, mu_s:
// ln(mu_r/mu_s)/(mu_r - mu_s), or 1/mu at equal means.
double expected_inverse_sum(double mu_r, double mu_s);

// Closed-form lower bound of the ergodic secrecy sum rate. Without the
// jammer every eta_j term vanishes and the jammer outage factor is 1.
LowerBoundReport essr_lower_bound(const SystemParams& p, const MeanGains& g);

}  // namespace relaysec

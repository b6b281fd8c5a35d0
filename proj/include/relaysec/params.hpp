#pragma once

namespace relaysec {

// Scenario constants for the two-way wireless-powered untrusted-relay link
// with an optional friendly jammer. Immutable after construction; share
// freely across threads.
struct SystemParams {
  double p_s1_w;     // source S1 transmit power
  double p_s2_w;     // source S2 transmit power
  double eta_r;      // relay energy conversion efficiency, (0,1]
  double eta_j;      // jammer energy conversion efficiency, (0,1]
  double alpha;      // time-switching ratio, (0,1)
  double n0_w;       // receiver noise power
  double theta_r_w;  // harvesting circuitry activation threshold at the relay
  double theta_j_w;  // activation threshold at the jammer
  bool jamming;      // friendly jammer active (WFJ) or absent (WoFJ)
  bool high_snr;     // drop the noise-product term of the end-to-end SNR

  // Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

// Node geometry, meters. Path loss maps it to mean channel power gains.
struct Topology {
  double d_s1r_m;
  double d_s2r_m;
  double d_s1j_m;
  double d_s2j_m;
  double d_rj_m;
  double rho;  // path-loss exponent

  void validate() const;
};

// Mean channel power gains of the five links. Reciprocity: one mean per
// unordered node pair.
struct MeanGains {
  double mu_s1r;
  double mu_s2r;
  double mu_s1j;
  double mu_s2j;
  double mu_rj;

  void validate() const;
};

// mu = d^(-rho) per link.
MeanGains mean_gains(const Topology& top);

}  // namespace relaysec

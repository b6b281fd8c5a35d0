#pragma once

#include "relaysec/channel.hpp"
#include "relaysec/params.hpp"

namespace relaysec {

// Received powers, harvested energies (block duration normalized to 1) and
// retransmit powers of one fading block.
struct PhasePowers {
  double p_r;   // received at the relay during harvesting
  double p_j;   // received at the jammer during harvesting
  double e_hr;  // energy harvested at the relay
  double e_hj;  // energy harvested at the jammer
  double p_tr;  // relay broadcast power
  double p_tj;  // jammer transmit power, 0 when the jammer is absent
};

// Per-realization SINRs, per-node rates and the clamped secrecy sum rate.
struct RatePoint {
  double gamma_r;
  double gamma_s1;
  double gamma_s2;
  double i_s1;   // bits/s/Hz
  double i_s2;
  double i_r;
  double r_sec;  // [i_s1 + i_s2 - i_r]^+
};

struct SourceSnrs {
  double gamma_s1;
  double gamma_s2;
};

PhasePowers phase_powers(const SystemParams& p, const FadingRealization& f);

// SINR of the superposed source signals at the relay; the jammer only adds
// to the denominator.
double relay_sinr(const SystemParams& p, const FadingRealization& f);

// Scaling the relay applies so its broadcast meets the harvested power budget.
double amplification_factor(const SystemParams& p, const FadingRealization& f);

// End-to-end SNRs after self-interference and jamming cancellation at the
// sources. The degenerate x = y = 0 realization yields zeros.
SourceSnrs source_snrs(const SystemParams& p, const FadingRealization& f);

RatePoint secrecy_rate(const SystemParams& p, const FadingRealization& f);

}  // namespace relaysec

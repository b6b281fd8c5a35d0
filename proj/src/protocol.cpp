#include "relaysec/protocol.hpp"

#include <algorithm>
#include <cmath>

namespace relaysec {

PhasePowers phase_powers(const SystemParams& p, const FadingRealization& f) {
  PhasePowers out{};
  out.p_r = p.p_s1_w * f.x + p.p_s2_w * f.y;
  out.p_j = p.p_s1_w * f.z + p.p_s2_w * f.w;
  out.e_hr = p.eta_r * p.alpha * out.p_r;
  out.e_hj = p.eta_j * p.alpha * out.p_j;
  // Harvested energy is spent over the (1-alpha)/2 broadcast slot.
  out.p_tr = 2.0 * p.eta_r * p.alpha * out.p_r / (1.0 - p.alpha);
  out.p_tj = p.jamming ? 2.0 * p.eta_j * p.alpha * out.p_j / (1.0 - p.alpha) : 0.0;
  return out;
}

double relay_sinr(const SystemParams& p, const FadingRealization& f) {
  const PhasePowers pw = phase_powers(p, f);
  return pw.p_r / (pw.p_tj * f.u + p.n0_w);
}

double amplification_factor(const SystemParams& p, const FadingRealization& f) {
  const PhasePowers pw = phase_powers(p, f);
  return std::sqrt(pw.p_tr / (pw.p_r + pw.p_tj * f.u + p.n0_w));
}

SourceSnrs source_snrs(const SystemParams& p, const FadingRealization& f) {
  const PhasePowers pw = phase_powers(p, f);
  if (pw.p_r == 0.0) return {0.0, 0.0};  // relay had nothing to forward

  const double c = 2.0 * p.eta_r * p.alpha;
  const double one_minus_alpha = 1.0 - p.alpha;
  const double xy = f.x * f.y;
  // Power the relay wastes forwarding the jamming signal, and the
  // noise-product term dropped in the high-SNR regime. Both are shared by the
  // two directions, which keeps the source-swap symmetry bit-exact.
  const double jam = p.n0_w * pw.p_tj * f.u * one_minus_alpha / pw.p_r;
  const double eps = p.high_snr ? 0.0 : p.n0_w * p.n0_w * one_minus_alpha / pw.p_r;
  const double common = jam + p.n0_w * one_minus_alpha + eps;
  const double cn0 = c * p.n0_w;

  SourceSnrs out{};
  out.gamma_s2 = c * p.p_s1_w * xy / (cn0 * f.y + common);
  out.gamma_s1 = c * p.p_s2_w * xy / (cn0 * f.x + common);
  return out;
}

RatePoint secrecy_rate(const SystemParams& p, const FadingRealization& f) {
  RatePoint out{};
  out.gamma_r = relay_sinr(p, f);
  const SourceSnrs s = source_snrs(p, f);
  out.gamma_s1 = s.gamma_s1;
  out.gamma_s2 = s.gamma_s2;
  const double pre_log = 0.5 * (1.0 - p.alpha);
  out.i_s1 = pre_log * std::log2(1.0 + out.gamma_s1);
  out.i_s2 = pre_log * std::log2(1.0 + out.gamma_s2);
  out.i_r = pre_log * std::log2(1.0 + out.gamma_r);
  out.r_sec = std::max(out.i_s1 + out.i_s2 - out.i_r, 0.0);
  return out;
}

}  // namespace relaysec

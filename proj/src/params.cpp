#include "relaysec/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relaysec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void SystemParams::validate() const {
  require(finite_positive(p_s1_w), "p_s1_w must be > 0");
  require(finite_positive(p_s2_w), "p_s2_w must be > 0");
  require(finite_positive(n0_w), "n0_w must be > 0");
  // eta strictly below 1 in the model; 1 accepted as the lossless limit.
  require(std::isfinite(eta_r) && eta_r > 0.0 && eta_r <= 1.0, "eta_r must be in (0,1]");
  require(std::isfinite(eta_j) && eta_j > 0.0 && eta_j <= 1.0, "eta_j must be in (0,1]");
  require(std::isfinite(alpha) && alpha > 0.0 && alpha < 1.0, "alpha must be in (0,1)");
  require(std::isfinite(theta_r_w) && theta_r_w >= 0.0, "theta_r_w must be >= 0");
  require(std::isfinite(theta_j_w) && theta_j_w >= 0.0, "theta_j_w must be >= 0");
}

void Topology::validate() const {
  require(finite_positive(d_s1r_m), "d_s1r_m must be > 0");
  require(finite_positive(d_s2r_m), "d_s2r_m must be > 0");
  require(finite_positive(d_s1j_m), "d_s1j_m must be > 0");
  require(finite_positive(d_s2j_m), "d_s2j_m must be > 0");
  require(finite_positive(d_rj_m), "d_rj_m must be > 0");
  require(finite_positive(rho), "rho must be > 0");
}

void MeanGains::validate() const {
  require(finite_positive(mu_s1r), "mu_s1r must be > 0");
  require(finite_positive(mu_s2r), "mu_s2r must be > 0");
  require(finite_positive(mu_s1j), "mu_s1j must be > 0");
  require(finite_positive(mu_s2j), "mu_s2j must be > 0");
  require(finite_positive(mu_rj), "mu_rj must be > 0");
}

MeanGains mean_gains(const Topology& top) {
  top.validate();
  return MeanGains{
      std::pow(top.d_s1r_m, -top.rho), std::pow(top.d_s2r_m, -top.rho),
      std::pow(top.d_s1j_m, -top.rho), std::pow(top.d_s2j_m, -top.rho),
      std::pow(top.d_rj_m, -top.rho)};
}

}  // namespace relaysec

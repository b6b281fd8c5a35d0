#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "relaysec/params.hpp"

namespace relaysec {

// Bad config file, bad key, bad flag value. Maps to process exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration as written at the boundary: dBW/dBm for powers, meters for
// distances. Resolution order is defaults -> file -> explicit overrides.
struct RunConfig {
  double p_s1_dbw = 10.0;
  double p_s2_dbw = 10.0;
  double eta_r = 0.7;
  double eta_j = 0.7;
  double alpha = 0.5;
  double n0_dbm = -10.0;
  double theta_r_dbm = 0.0;
  std::optional<double> theta_j_dbm;  // defaults to theta_r_dbm
  bool jamming = true;
  bool high_snr = false;
  double d_s1r_m = 3.0;
  double d_s2r_m = 3.0;
  double d_s1j_m = 3.0;
  double d_s2j_m = 3.0;
  double d_rj_m = 1.5;
  double rho = 2.7;

  // Flat key-value text, one `key = value` per line, '#' comments.
  // Unknown keys are rejected.
  static RunConfig from_file(const std::string& path);
  static RunConfig parse(const std::string& text);

  void apply(const std::string& key, const std::string& value);
  void apply_overrides(const std::map<std::string, std::string>& overrides);

  SystemParams to_params() const;   // validated
  Topology to_topology() const;     // validated
};

}  // namespace relaysec

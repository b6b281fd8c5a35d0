#include "relaysec/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "relaysec/units.hpp"

namespace relaysec {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "': not a number: '" + value + "'");
  }
  if (pos != value.size()) {
    throw ConfigError("config: key '" + key + "': trailing characters in '" + value + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  std::string v = value;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("config: key '" + key + "': not a boolean: '" + value + "'");
}

}  // namespace

void RunConfig::apply(const std::string& key, const std::string& value) {
  if (key == "p_s1_dbw") p_s1_dbw = parse_double(key, value);
  else if (key == "p_s2_dbw") p_s2_dbw = parse_double(key, value);
  else if (key == "eta_r") eta_r = parse_double(key, value);
  else if (key == "eta_j") eta_j = parse_double(key, value);
  else if (key == "alpha") alpha = parse_double(key, value);
  else if (key == "n0_dbm") n0_dbm = parse_double(key, value);
  else if (key == "theta_r_dbm") theta_r_dbm = parse_double(key, value);
  else if (key == "theta_j_dbm") theta_j_dbm = parse_double(key, value);
  else if (key == "jamming") jamming = parse_bool(key, value);
  else if (key == "high_snr") high_snr = parse_bool(key, value);
  else if (key == "d_s1r_m") d_s1r_m = parse_double(key, value);
  else if (key == "d_s2r_m") d_s2r_m = parse_double(key, value);
  else if (key == "d_s1j_m") d_s1j_m = parse_double(key, value);
  else if (key == "d_s2j_m") d_s2j_m = parse_double(key, value);
  else if (key == "d_rj_m") d_rj_m = parse_double(key, value);
  else if (key == "rho") rho = parse_double(key, value);
  else throw ConfigError("config: unknown key '" + key + "'");
}

void RunConfig::apply_overrides(const std::map<std::string, std::string>& overrides) {
  for (const auto& [k, v] : overrides) apply(k, v);
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    cfg.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

SystemParams RunConfig::to_params() const {
  SystemParams p{};
  p.p_s1_w = dbw_to_watts(p_s1_dbw);
  p.p_s2_w = dbw_to_watts(p_s2_dbw);
  p.eta_r = eta_r;
  p.eta_j = eta_j;
  p.alpha = alpha;
  p.n0_w = dbm_to_watts(n0_dbm);
  p.theta_r_w = dbm_to_watts(theta_r_dbm);
  p.theta_j_w = dbm_to_watts(theta_j_dbm.value_or(theta_r_dbm));
  p.jamming = jamming;
  p.high_snr = high_snr;
  p.validate();
  return p;
}

Topology RunConfig::to_topology() const {
  Topology t{d_s1r_m, d_s2r_m, d_s1j_m, d_s2j_m, d_rj_m, rho};
  t.validate();
  return t;
}

}  // namespace relaysec

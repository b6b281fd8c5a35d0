#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "relaysec/params.hpp"

namespace relaysec {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Scenario { wfj, wofj };
enum class Method { closed_form, monte_carlo };

const char* to_string(Scenario s);
const char* to_string(Method m);

struct SweepSpec {
  enum class Variable { alpha, snr_db, distance_m };
  Variable variable = Variable::alpha;
  double start = 0.05;
  double stop = 0.95;
  int steps = 19;
  std::vector<Scenario> scenarios = {Scenario::wfj, Scenario::wofj};
  std::vector<Method> methods = {Method::closed_form, Method::monte_carlo};
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
  // Distance sweep: jammer-relay separation as a fraction of d, and the
  // resolution of the co-swept alpha grid on [0.05, 0.95].
  double drj_ratio = 1.0;
  int alpha_steps = 19;

  void validate() const;  // throws ConfigError
};

struct SweepRow {
  std::string variable;
  double value;
  Scenario scenario;
  Method method;
  double essr;     // bits/s/Hz
  double std_err;  // 0 for the closed form
};

// ESSR vs time-switching ratio. Monte Carlo points share one seed (common
// random numbers), so curves are smooth and rerunnable bit-for-bit.
std::vector<SweepRow> sweep_alpha(const SweepSpec& spec, const SystemParams& base,
                                  const MeanGains& gains);

// ESSR vs transmit SNR: P_S1 = P_S2 = N_0 * 10^(snr/10), noise fixed.
std::vector<SweepRow> sweep_snr(const SweepSpec& spec, const SystemParams& base,
                                const MeanGains& gains);

// ESSR vs alpha for each node separation d; all inter-node distances except
// S1-S2 equal d, with d_RJ = drj_ratio * d. One curve per d.
std::vector<SweepRow> sweep_distance(const SweepSpec& spec, const SystemParams& base,
                                     const Topology& top);

struct OptimizeResult {
  double alpha_opt;
  double essr;
  bool used_fallback;  // grid scan instead of golden-section
};

// Golden-section search over alpha in [0.01, 0.99]. A coarse scan first
// checks unimodality; flat or multi-peaked objectives fall back to a grid
// scan with a warning. Monte Carlo evaluations reuse one seed so the
// objective is deterministic.
OptimizeResult optimize_alpha(const SystemParams& base, const MeanGains& gains, Scenario scenario,
                              Method method, double tolerance, std::uint64_t mc_samples = 1000000,
                              std::uint64_t seed = 1);

// True when values rise to a single peak and fall after it, up to tolerance.
bool is_unimodal(const std::vector<double>& values, double tolerance);

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
};

// Cross-module consistency: closed-form outage and E{H} against their
// empirical estimates, pdf normalizations by quadrature, and closed-form
// lower bound sanity against the Monte Carlo ESSR.
ValidationReport validate(const SystemParams& p, const MeanGains& g, std::uint64_t n,
                          std::uint64_t seed);

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(std::istream& is);
void write_json(std::ostream& os, const SystemParams& p, const Topology& top,
                const std::vector<SweepRow>& rows);

}  // namespace relaysec

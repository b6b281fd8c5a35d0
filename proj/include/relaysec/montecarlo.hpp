#pragma once

#include <cstdint>

#include "relaysec/params.hpp"
#include "relaysec/rng.hpp"

namespace relaysec {

// One Monte Carlo estimate. Identical (seed, stream_id, n, parameters)
// reproduce the mean bit-for-bit regardless of n_streams: samples are keyed
// by global index and partial sums are combined in fixed block order.
struct McEstimate {
  double mean;
  double std_err;
  std::uint64_t n;
  std::uint64_t seed;
  unsigned n_streams;
};

enum class OutageTarget { relay, jammer };

struct EssrOptions {
  // Average the secrecy rate only over non-outage realizations instead of
  // all realizations.
  bool conditional = false;
  // Use the empirical outage frequencies of this run for the prefactor
  // instead of the closed form.
  bool empirical_prefactor = false;
  unsigned n_streams = 0;  // 0 = hardware concurrency
};

// Ergodic secrecy sum rate: outage prefactor times the sample mean of the
// per-realization secrecy rate.
McEstimate estimate_essr(const SystemParams& p, const MeanGains& g, std::uint64_t n,
                         const RngStream& rng, const EssrOptions& opts = {});

// Empirical frequency of the harvested power falling below the activation
// threshold, with binomial standard error.
McEstimate estimate_outage(const SystemParams& p, const MeanGains& g, OutageTarget target,
                           std::uint64_t n, const RngStream& rng, unsigned n_streams = 0);

// Sample mean of 1/(P_S1 X + P_S2 Y).
McEstimate estimate_expected_inverse_sum(const SystemParams& p, const MeanGains& g,
                                         std::uint64_t n, const RngStream& rng,
                                         unsigned n_streams = 0);

}  // namespace relaysec

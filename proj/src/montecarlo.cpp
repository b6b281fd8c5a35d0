#include "relaysec/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "relaysec/analytics.hpp"
#include "relaysec/channel.hpp"
#include "relaysec/protocol.hpp"

namespace relaysec {

namespace {

// Samples are processed in fixed-size index blocks. Workers claim blocks
// dynamically, but every block's accumulator depends only on the sample
// indices it covers and the final reduction walks blocks in order, so the
// result is invariant to the worker count.
constexpr std::uint64_t kBlockSize = 1 << 16;

struct BlockAccum {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t kept = 0;
  std::uint64_t outage_r = 0;
  std::uint64_t outage_j = 0;
};

unsigned resolve_streams(unsigned n_streams) {
  if (n_streams != 0) return n_streams;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw != 0 ? hw : 1;
}

// fn(sample_index, accum) is applied to every index in [0, n).
template <typename Fn>
std::vector<BlockAccum> accumulate_blocks(std::uint64_t n, unsigned n_streams, Fn&& fn) {
  const std::uint64_t n_blocks = (n + kBlockSize - 1) / kBlockSize;
  std::vector<BlockAccum> blocks(n_blocks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= n_blocks) return;
      const std::uint64_t lo = b * kBlockSize;
      const std::uint64_t hi = std::min(n, lo + kBlockSize);
      BlockAccum acc;
      for (std::uint64_t i = lo; i < hi; ++i) fn(i, acc);
      blocks[b] = acc;
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_streams(n_streams), n_blocks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return blocks;
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t kept = 0;
  std::uint64_t outage_r = 0;
  std::uint64_t outage_j = 0;
};

Moments reduce_in_order(const std::vector<BlockAccum>& blocks) {
  Moments m;
  for (const auto& b : blocks) {
    m.sum += b.sum;
    m.sum_sq += b.sum_sq;
    m.kept += b.kept;
    m.outage_r += b.outage_r;
    m.outage_j += b.outage_j;
  }
  return m;
}

// Standard error of the sample mean from raw moments.
double std_err_of_mean(double sum, double sum_sq, std::uint64_t n) {
  if (n < 2) return 0.0;
  const double mean = sum / static_cast<double>(n);
  const double var =
      std::max(0.0, (sum_sq - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1));
  return std::sqrt(var / static_cast<double>(n));
}

void check_inputs(const SystemParams& p, const MeanGains& g, std::uint64_t n) {
  p.validate();
  g.validate();
  if (n < 1) throw std::invalid_argument("monte carlo: n must be >= 1");
}

}  // namespace

McEstimate estimate_essr(const SystemParams& p, const MeanGains& g, std::uint64_t n,
                         const RngStream& rng, const EssrOptions& opts) {
  check_inputs(p, g, n);

  const auto blocks = accumulate_blocks(n, opts.n_streams, [&](std::uint64_t i, BlockAccum& acc) {
    const FadingRealization f = fading_at(g, rng, i);
    const PhasePowers pw = phase_powers(p, f);
    const bool out_r = pw.p_r < p.theta_r_w;
    const bool out_j = pw.p_j < p.theta_j_w;
    acc.outage_r += out_r;
    acc.outage_j += out_j;
    if (opts.conditional && (out_r || (p.jamming && out_j))) return;
    const double r = secrecy_rate(p, f).r_sec;
    acc.sum += r;
    acc.sum_sq += r * r;
    acc.kept += 1;
  });
  const Moments m = reduce_in_order(blocks);

  double pre;
  if (opts.empirical_prefactor) {
    const double inv_n = 1.0 / static_cast<double>(n);
    pre = (1.0 - static_cast<double>(m.outage_r) * inv_n);
    if (p.jamming) pre *= (1.0 - static_cast<double>(m.outage_j) * inv_n);
  } else {
    pre = 1.0 - power_outage_from_means(p.p_s1_w * g.mu_s1r, p.p_s2_w * g.mu_s2r, p.theta_r_w);
    if (p.jamming) {
      pre *= 1.0 - power_outage_from_means(p.p_s1_w * g.mu_s1j, p.p_s2_w * g.mu_s2j, p.theta_j_w);
    }
  }

  McEstimate est{};
  est.n = n;
  est.seed = rng.seed();
  est.n_streams = resolve_streams(opts.n_streams);
  const std::uint64_t kept = m.kept > 0 ? m.kept : 1;
  est.mean = pre * m.sum / static_cast<double>(kept);
  est.std_err = pre * std_err_of_mean(m.sum, m.sum_sq, kept);
  return est;
}

McEstimate estimate_outage(const SystemParams& p, const MeanGains& g, OutageTarget target,
                           std::uint64_t n, const RngStream& rng, unsigned n_streams) {
  check_inputs(p, g, n);

  const auto blocks = accumulate_blocks(n, n_streams, [&](std::uint64_t i, BlockAccum& acc) {
    const FadingRealization f = fading_at(g, rng, i);
    const PhasePowers pw = phase_powers(p, f);
    acc.outage_r += pw.p_r < p.theta_r_w;
    acc.outage_j += pw.p_j < p.theta_j_w;
  });
  const Moments m = reduce_in_order(blocks);

  const std::uint64_t hits = target == OutageTarget::relay ? m.outage_r : m.outage_j;
  const double p_hat = static_cast<double>(hits) / static_cast<double>(n);

  McEstimate est{};
  est.n = n;
  est.seed = rng.seed();
  est.n_streams = resolve_streams(n_streams);
  est.mean = p_hat;
  est.std_err = std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n));
  return est;
}

McEstimate estimate_expected_inverse_sum(const SystemParams& p, const MeanGains& g,
                                         std::uint64_t n, const RngStream& rng,
                                         unsigned n_streams) {
  check_inputs(p, g, n);

  const auto blocks = accumulate_blocks(n, n_streams, [&](std::uint64_t i, BlockAccum& acc) {
    // x = y = 0 cannot divide; redraw that index from its next sub-block.
    double denom = 0.0;
    for (std::uint64_t redraw = 0; redraw < 64; ++redraw) {
      const FadingRealization f = fading_at(g, rng, i, redraw);
      denom = p.p_s1_w * f.x + p.p_s2_w * f.y;
      if (denom > 0.0) break;
    }
    const double h = 1.0 / denom;
    acc.sum += h;
    acc.sum_sq += h * h;
    acc.kept += 1;
  });
  const Moments m = reduce_in_order(blocks);

  McEstimate est{};
  est.n = n;
  est.seed = rng.seed();
  est.n_streams = resolve_streams(n_streams);
  est.mean = m.sum / static_cast<double>(n);
  est.std_err = std_err_of_mean(m.sum, m.sum_sq, n);
  return est;
}

}  // namespace relaysec

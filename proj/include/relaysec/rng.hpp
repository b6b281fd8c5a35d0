#pragma once

#include <array>
#include <cstdint>

namespace relaysec {

// Philox4x64-10 counter-based generator (Salmon et al., SC'11). The output
// block is a pure function of (counter, key), so the i-th draw of a stream is
// identical no matter how samples are sharded across threads.
namespace philox {

inline constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
inline constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
inline constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mul_hi_lo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

inline std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> ctr,
                                          std::array<std::uint64_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mul_hi_lo(kMult0, ctr[0], hi0, lo0);
    mul_hi_lo(kMult1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

}  // namespace philox

// Maps a 64-bit word to the open interval (0,1): 53 random bits, offset by
// half an ulp so 0 and 1 are unreachable.
inline double to_unit_interval(std::uint64_t r) {
  return (static_cast<double>(r >> 11) + 0.5) * 0x1.0p-53;
}

// A deterministic random stream addressed by (seed, stream_id, sample index).
// Draws for sample index i never depend on draws for other indices; the
// sequential interface just tracks a cursor over indices.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t position() const noexcept { return position_; }
  void seek(std::uint64_t sample_index) noexcept { position_ = sample_index; }
  std::uint64_t advance() noexcept { return position_++; }

  // Four uniforms on (0,1) for (sample_index, block_index).
  std::array<double, 4> uniforms_at(std::uint64_t sample_index,
                                    std::uint64_t block_index) const noexcept {
    const auto words = philox::block({sample_index, block_index, 0, 0}, {seed_, stream_id_});
    return {to_unit_interval(words[0]), to_unit_interval(words[1]),
            to_unit_interval(words[2]), to_unit_interval(words[3])};
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t position_ = 0;
};

}  // namespace relaysec

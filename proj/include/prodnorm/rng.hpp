#pragma once

// Counter-based random numbers (Philox4x32-10) with random access, so any
// sample of a Monte Carlo run can be regenerated without replaying the ones
// before it.

#include <array>
#include <cstdint>

namespace prodnorm::mc {

/// One Philox4x32-10 block: 128 output bits for a 128-bit counter and a
/// 64-bit key.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Standard normal quantile (Wichura's AS 241, about 1e-16 relative).
double inverse_normal_cdf(double p);

/// Stream of variates for (master_seed, substream). The counter holds the
/// block index in its low 64 bits and the substream in its high 64 bits;
/// each block yields two uniforms.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t substream);

  std::uint64_t master_seed() const { return seed_; }
  std::uint64_t substream() const { return substream_; }

  /// Next draw comes from the first half of block `block`.
  void seek(std::uint64_t block);

  /// Uniform on (0, 1), 53-bit resolution, never 0 or 1.
  double next_uniform();
  double next_normal() { return inverse_normal_cdf(next_uniform()); }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t substream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int used_ = 4;  // uniforms consume two words each
};

}  // namespace prodnorm::mc

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace qvol {

/// Counter-based random stream (Philox4x32-10, Salmon et al., SC 2011).
///
/// The 64-bit seed keys the generator and the 64-bit sample index occupies the
/// high counter words, so every (seed, sample_index) pair names an independent
/// stream of 2^64 blocks. Streams are pure functions of their name: output
/// never depends on thread scheduling, which makes parallel surveys bitwise
/// reproducible for any worker count.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t sample_index)
      : counter_{0u, 0u, static_cast<std::uint32_t>(sample_index),
                 static_cast<std::uint32_t>(sample_index >> 32)},
        key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  std::uint32_t next_u32() {
    if (block_pos_ == 4) refill();
    return block_[block_pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return lo | (hi << 32);
  }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe to feed to log().
  double uniform_open01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Complex number with independent N(0,1) real and imaginary parts
  /// (Box-Muller on the uniform stream).
  std::complex<double> complex_normal() {
    const double radius = std::sqrt(-2.0 * std::log(uniform_open01()));
    const double angle = 2.0 * std::numbers::pi * uniform01();
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  static constexpr std::uint32_t kWeylA = 0x9E3779B9u;
  static constexpr std::uint32_t kWeylB = 0xBB67AE85u;
  static constexpr std::uint32_t kMultA = 0xD2511F53u;
  static constexpr std::uint32_t kMultB = 0xCD9E8D57u;

  static void round(std::array<std::uint32_t, 4>& ctr, const std::array<std::uint32_t, 2>& key) {
    const std::uint64_t prod0 = static_cast<std::uint64_t>(kMultA) * ctr[0];
    const std::uint64_t prod1 = static_cast<std::uint64_t>(kMultB) * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(prod0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(prod0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(prod1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(prod1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }

  void refill() {
    std::array<std::uint32_t, 4> ctr = counter_;
    std::array<std::uint32_t, 2> key = key_;
    for (int r = 0; r < 10; ++r) {
      if (r > 0) {
        key[0] += kWeylA;
        key[1] += kWeylB;
      }
      round(ctr, key);
    }
    block_ = ctr;
    block_pos_ = 0;
    if (++counter_[0] == 0) ++counter_[1];  // block counter; stream id words untouched
  }

  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;
};

}  // namespace qvol

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace cfpp {

/// xoshiro256** (Blackman and Vigna). Period 2^256 - 1; jump() advances by
/// 2^128 draws, so jumped copies give non-overlapping substreams.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  /// State filled from splitmix64(seed).
  explicit Xoshiro256(std::uint64_t seed);

  /// Generator for worker `index`: seeded from `seed`, then jumped `index` times.
  static Xoshiro256 substream(std::uint64_t seed, unsigned index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();
  void jump();

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();

  const std::array<std::uint64_t, 4>& state() const { return s_; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace cfpp

#pragma once

#include <array>
#include <cstdint>

namespace bcmaes {

// philox4x64-10 counter-based generator. The same (seed, counter)
// pair produces the same 256-bit block on any platform, so streams
// can be replayed or split without storing state beyond two integers.
class Philox4x64 {
 public:
  using Block = std::array<std::uint64_t, 4>;

  explicit Philox4x64(std::uint64_t seed)
      : key_{seed, 0}, counter_{0, 0, 0, 0} {}

  // Keyed round function applied to an explicit counter, 10 rounds.
  static Block block(const std::array<std::uint64_t, 2>& key, const Block& counter);

  std::uint64_t next_u64();

  // Uniform double in the open interval (0, 1).
  double next_uniform();

  // Standard normal via the Box-Muller transform; pairs are cached.
  double next_normal();

 private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  Block counter_;
  Block buffer_{};
  int buffer_pos_ = 4;  // forces refill on first use
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

using Rng = Philox4x64;

}  // namespace bcmaes

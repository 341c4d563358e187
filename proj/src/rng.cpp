#include "bcmaes/rng.hpp"

#include <cmath>

namespace bcmaes {

namespace {

constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  hi = static_cast<std::uint64_t>(prod >> 64);
  lo = static_cast<std::uint64_t>(prod);
}

}  // namespace

Philox4x64::Block Philox4x64::block(const std::array<std::uint64_t, 2>& key,
                                    const Block& counter) {
  Block ctr = counter;
  std::array<std::uint64_t, 2> k = key;
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMult0, ctr[0], hi0, lo0);
    mulhilo(kMult1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ k[0], lo1, hi0 ^ ctr[3] ^ k[1], lo0};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return ctr;
}

void Philox4x64::refill() {
  buffer_ = block(key_, counter_);
  for (int i = 0; i < 4; ++i) {
    if (++counter_[i] != 0) break;
  }
  buffer_pos_ = 0;
}

std::uint64_t Philox4x64::next_u64() {
  if (buffer_pos_ == 4) refill();
  return buffer_[buffer_pos_++];
}

double Philox4x64::next_uniform() {
  // 53 random bits centered in (0,1); never returns 0 or 1, so logs
  // are always finite.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Philox4x64::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

}  // namespace bcmaes

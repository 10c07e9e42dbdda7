#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hcn::sim {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic per-(trial, stream) random source. The engine is the
/// standard-specified mt19937_64; all transforms are inverse-CDF based so the
/// produced values are identical on every platform.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream)
      : eng_(splitmix64(splitmix64(seed ^ 0xd1b54a32d192ed03ULL) +
                        splitmix64(trial) * 0x9e3779b97f4a7c15ULL + stream)) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double exponential() { return -std::log1p(-uniform()); }

  double erlang(int shape) {  // Gamma(shape, 1) for integer shape
    double sum = 0.0;
    for (int i = 0; i < shape; ++i) sum += exponential();
    return sum;
  }

 private:
  std::mt19937_64 eng_;
};

// Stream ids, one independent substream per consumer.
namespace stream {
inline constexpr std::uint64_t bs_tier(std::size_t j) { return j; }
inline constexpr std::uint64_t users = 64;
inline constexpr std::uint64_t desired_fading = 96;
inline constexpr std::uint64_t interf_fading(std::size_t j) { return 128 + j; }
}  // namespace stream

}  // namespace hcn::sim

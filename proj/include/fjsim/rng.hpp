#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace fjsim {

// xoshiro256++ with SplitMix64 state initialization.
//
// A (seed, stream) pair fully determines the output sequence: stream s mixes
// the seed as seed XOR (s+1)*0x9E3779B97F4A7C15 and expands it through
// SplitMix64 into the four state words. Distinct streams are statistically
// independent for practical purposes, so parallel replications can share one
// seed and use consecutive stream ids.
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {
    uint64_t x = seed ^ ((stream + 1) * 0x9E3779B97F4A7C15ULL);
    bool any = false;
    for (auto& w : state_) {
      w = splitmix64(x);
      any = any || w != 0;
    }
    if (!any) state_[0] = 0x9E3779B97F4A7C15ULL;
  }

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform draw on [0, 1) with 53 significant bits; never returns 1, so
  // 1 - u is always positive.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Inverse-CDF exponential sample, -ln(1-U)/rate.
  double exponential(double rate) {
    return -std::log1p(-uniform01()) / rate;
  }

  // Inverse-CDF Pareto sample, xm * (1-U)^(-1/alpha).
  double pareto(double xm, double alpha) {
    return xm * std::pow(1.0 - uniform01(), -1.0 / alpha);
  }

  // Unbiased integer on [0, bound) via Lemire's multiply-shift rejection.
  uint64_t uniform_below(uint64_t bound) {
    const uint64_t threshold = (-bound) % bound;
    for (;;) {
      const uint64_t r = next_u64();
      const auto m = static_cast<unsigned __int128>(r) * bound;
      if (static_cast<uint64_t>(m) >= threshold) {
        return static_cast<uint64_t>(m >> 64);
      }
    }
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::array<uint64_t, 4> state_;
  uint64_t seed_;
  uint64_t stream_;
};

}  // namespace fjsim

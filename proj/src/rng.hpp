#pragma once

#include <cstdint>

namespace mixlat {

// Deterministic 64-bit linear congruential generator.
//
// state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64)
//
// The constants are fixed so that fixtures generated from a seed are
// reproducible bit-for-bit across platforms and implementations. Draws use
// the high 32 bits, which have much better statistics than the low ones.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Uniform in [0, bound). Requires 0 < bound <= 2^32.
  std::uint64_t below(std::uint64_t bound) { return (next() >> 32) % bound; }

  // Bernoulli draw with probability p (clamped to [0,1]).
  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    // 53 high bits as a uniform double in [0,1).
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mixlat

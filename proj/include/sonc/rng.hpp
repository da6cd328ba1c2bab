#pragma once

#include <cstdint>

#include "sonc/rational.hpp"

namespace sonc {

// SplitMix64. Self-contained so that seeded runs are byte-identical across
// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Small positive rational p/q with 1 <= p, q <= bound.
  Rat positive_rat(long bound = 9) { return Rat(range(1, bound), range(1, bound)); }

  // Rational strictly greater than 1.
  Rat rat_above_one(long bound = 9) {
    long q = range(1, bound);
    long p = q + range(1, bound);
    return Rat(p, q);
  }

 private:
  std::uint64_t state_;
};

}  // namespace sonc

#pragma once

// Deterministic splitmix64 generator: identical streams on every platform,
// which keeps seeded trials byte-reproducible in reports.

#include <cstdint>

namespace tbn {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) {
    uint64_t threshold = -n % n;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + (long long)below((uint64_t)(hi - lo + 1));
  }

 private:
  uint64_t state_;
};

}  // namespace tbn

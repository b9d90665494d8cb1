#pragma once

#include <cstdint>

#include "numbers.hpp"

namespace nakayama {

// splitmix64: tiny deterministic generator, identical output on every
// platform for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi], inclusive
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  // small positive rational p/q with 1 <= p,q <= 20
  Rat small_rational() {
    int p = range(1, 20);
    int q = range(1, 20);
    return Rat(p, q);
  }

  std::vector<Rat> small_rational_vector(int n) {
    std::vector<Rat> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(small_rational());
    return v;
  }

 private:
  uint64_t state_;
};

}  // namespace nakayama

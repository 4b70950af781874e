#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace emsim {

// splitmix64 step; used to whiten seeds and to derive independent streams.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Mixes a master seed with a list of indices into one stream seed.  Every
// randomized routine derives its streams through this, so results are a pure
// function of (master seed, indices) and independent of thread scheduling.
inline uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> idx) {
  uint64_t s = master ^ 0xa0761d6478bd642fULL;
  (void)splitmix64(s);
  for (uint64_t v : idx) {
    s ^= splitmix64(s) + v;
    (void)splitmix64(s);
  }
  return splitmix64(s);
}

// mt19937_64 with explicit value derivation: the draw sequence for a given
// seed depends only on this file, not on the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  static Rng derive(uint64_t master, std::initializer_list<uint64_t> idx) {
    return Rng(derive_seed(master, idx));
  }

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform integer in [0, n), unbiased via rejection.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    uint64_t mask = ~uint64_t{0} >> __builtin_clzll((n - 1) | 1);
    for (;;) {
      uint64_t v = eng_() & mask;
      if (v < n) return v;
    }
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Box-Muller, one value per call (no cached spare, keeps streams simple).
  double gaussian(double mean, double stddev) {
    double u1 = uniform01(), u2 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace emsim

#pragma once

#include <cstdint>
#include <random>

#include "negdep/scalar.hpp"

namespace negdep {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed for sub-task `index` of a run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Seeded random stream. Every randomized operation takes one of these
/// explicitly; nothing draws from global state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  double uniform() {
    // 53-bit mantissa in [0,1).
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
    return dist(eng_);
  }

  template <class S>
  bool bernoulli(const S& p) {
    return uniform() < to_double(p);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace negdep

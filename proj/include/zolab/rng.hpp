#ifndef ZOLAB_RNG_HPP
#define ZOLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

namespace zolab {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Counter-based stream: output i is mix64(key + i * odd-constant).  Streams
/// derived from distinct (seed, n, trial, tag) tuples are independent, and a
/// stream is a pure function of its key, so trials can run in parallel
/// without any draw-order coupling.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  /// Key derivation for the samplers and experiments.
  CounterRng(std::uint64_t seed, std::uint64_t n, std::uint64_t trial, std::string_view tag)
      : key_(mix64(mix64(mix64(mix64(seed) ^ n) ^ trial) ^ hash_str(tag))) {}

  std::uint64_t next_u64() { return mix64(key_ + 0xd1342543de82ef95ULL * counter_++); }

  /// Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound) {
    // Rejection from the top to avoid modulo bias.
    std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  /// Number of failures before the first success of a Bernoulli(p) sequence.
  /// Used to skip over non-edges in O(expected edges) sampling.
  std::uint64_t geometric_skip(double p) {
    double u = 1.0 - uniform01();  // in (0, 1]
    if (p >= 1.0) return 0;
    double g = std::floor(std::log(u) / std::log1p(-p));
    if (g < 0) g = 0;
    if (g > 9.0e18) return static_cast<std::uint64_t>(9.0e18);
    return static_cast<std::uint64_t>(g);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace zolab

#endif

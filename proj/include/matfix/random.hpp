#pragma once

#include <cstdint>

#include "matfix/linalg.hpp"

namespace matfix {

/// Counter-based 64-bit generator.
///
/// Output i is splitmix64(seed + (i + 1) * 0x9E3779B97F4A7C15), i.e. the
/// SplitMix64 finalizer applied to a Weyl sequence. The generator is a plain
/// value: copying it forks the stream, and there is no global state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller (both variates of a pair are used).
  double normal();
  /// Complex normal with independent N(0, 1/2) parts, so E|z|^2 = 1.
  Complex complex_normal();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace matfix

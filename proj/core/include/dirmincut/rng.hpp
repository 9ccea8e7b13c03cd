#pragma once

#include <cstdint>

namespace dirmincut {

/// Splittable PRNG built on SplitMix64. Every randomized operation in the
/// library takes one of these explicitly; split() derives an independent
/// child stream so trial loops can fan out while staying reproducible from
/// a single user seed. All derived distributions are implemented here (not
/// via <random>) so results are identical across standard libraries.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform in [0, bound); bound > 0. Rejection sampling, unbiased.
  std::uint64_t next_below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double next_double();
  bool bernoulli(double p);
  /// Binomial(trials, p). Inverse transform for trials <= 64 or when exact
  /// is set; otherwise a normal approximation clamped to [0, trials].
  std::int64_t binomial(std::int64_t trials, double p, bool exact = false);
  /// Independent child stream; advances this generator.
  SplitRng split();

 private:
  std::uint64_t state_;
  std::uint64_t gamma_;  // odd increment, distinct per stream
};

}  // namespace dirmincut

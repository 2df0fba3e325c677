#pragma once

#include <cstdint>
#include <random>

#include "gitgraph/counting.hpp"

namespace gitgraph {

// Seedable random source. The generator is pinned to std::mt19937_64 and
// every derived draw goes through the rejection loops below, so a given seed
// reproduces the same stream everywhere. Not safe to share across threads;
// use split() to derive independent sources.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();

  // Uniform in [0, bound), bound >= 1. Rejection on the top range.
  std::uint64_t below(std::uint64_t bound);

  // Uniform arbitrary-precision integer in [0, bound), bound >= 1.
  big_int below_big(const big_int& bound);

  double real01();       // uniform in [0, 1), 53 bits
  double real01_open();  // uniform in (0, 1]

  // Child source for parallel use; stream indices give distinct seeds via a
  // splitmix64 step.
  RandomSource split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace gitgraph

#include "gitgraph/random.hpp"

#include <stdexcept>

namespace gitgraph {

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), gen_(seed) {}

std::uint64_t RandomSource::next_u64() { return gen_(); }

std::uint64_t RandomSource::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

big_int RandomSource::below_big(const big_int& bound) {
  if (bound <= 0) throw std::invalid_argument("bound must be positive");
  if (bound <= UINT64_MAX) return below(bound.convert_to<std::uint64_t>());
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  const std::size_t chunks = (bits + 63) / 64;
  for (;;) {
    big_int x = 0;
    for (std::size_t i = 0; i < chunks; ++i) {
      x <<= 64;
      x |= next_u64();
    }
    x >>= chunks * 64 - bits;
    if (x < bound) return x;
  }
}

double RandomSource::real01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::real01_open() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomSource RandomSource::split(std::uint64_t stream) const {
  return RandomSource(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

}  // namespace gitgraph

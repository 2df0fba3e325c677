#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gitgraph/counting.hpp"
#include "gitgraph/graph.hpp"
#include "gitgraph/random.hpp"

namespace gitgraph {

// Parameters of the labeled-main Boltzmann distribution
// P(g) = u^k z^n / (k! * G~(z,u)).
struct BoltzmannParams {
  double z = 0.0;
  double u = 0.0;

  // Strictly inside the convergence domain: 0 < z < 1, u > 0 and
  // u z^2 / (1-z) < 1.
  bool valid() const;
};

struct RejectionSample {
  GitGraph graph;
  std::uint64_t trials = 0;
};

// True when k <= 3 sqrt(n), the regime where the expected number of
// rejection trials is bounded. Outside it the sampler still works but may
// retry many times; callers should warn rather than refuse.
bool rejection_regime_ok(std::int64_t n, std::int64_t k);

// Exactly uniform over Git graphs with n vertices and k black ones, by
// rejection from the superset model H. Expected trials h(n,k)/g(n,k).
RejectionSample sample_rejection(std::int64_t n, std::int64_t k, RandomSource& rng);

// Uniform composition of m into p parts via uniform bar positions.
// positive: parts >= 1 (needs m >= p); otherwise parts >= 0 (p = 0 only
// with m = 0).
std::vector<std::int64_t> sample_composition(std::int64_t m, std::int64_t p,
                                             bool positive, RandomSource& rng);

// Uniform permutation of {1..k} with exactly f cycles, in cycle form.
// Recursive rule on the largest element: singleton cycle with probability
// [k-1,f-1]/[k,f], else uniform insertion after an existing element.
std::vector<std::vector<std::int64_t>> sample_permutation_with_cycles(
    std::int64_t k, std::int64_t f, RandomSource& rng, const StirlingTable& stirling);

// Exactly uniform over Git graphs with parameters (n, k), or (n, k, f) when
// f is supplied. When k fits in the Stirling table this is the table-driven
// path: sample f by cumulative scan, then a permutation with f cycles, then
// a positive composition, assemble the cyclarium and apply the bijection.
// When k exceeds the table and f is absent, the table-free large-scale path
// below is used instead.
GitGraph sample_exact(std::int64_t n, std::int64_t k, std::optional<std::int64_t> f,
                      RandomSource& rng, const StirlingTable& stirling);

// Table-free exact sampler: draws uniform permutations of {1..k} and accepts
// one with f cycles with probability C(n-k-1, k-f-1) / max_f' C(n-k-1, k-f'-1),
// evaluated as an exact product of small rationals. The accepted pair
// (permutation, f) has exactly the target joint law, so the output is
// exactly uniform with no Stirling precomputation. Fast when the class's
// typical f is near ln k (in particular when n is a few multiples of k).
GitGraph sample_exact_tableless(std::int64_t n, std::int64_t k, RandomSource& rng);

// Uniform over all Git graphs of size n: draws k proportional to g(n,k),
// then delegates to sample_exact.
GitGraph sample_exact_size_only(std::int64_t n, const CountTable& counts,
                                const StirlingTable& stirling, RandomSource& rng);

// Boltzmann sampler for the labeled-main distribution; O(n + f^2) where f is
// the number of free vertices of the output.
GitGraph sample_boltzmann(const BoltzmannParams& params, RandomSource& rng);

// Discrete laws by sequential inversion. Poisson: P(j) = e^-l l^j / j!.
// Log-series: P(x) = p^x / (x * (-ln(1-p))), x >= 1. Geometric:
// P(m) = (1-z) z^m, m >= 0 (closed-form CDF inversion).
std::int64_t sample_poisson(double lambda, RandomSource& rng);
std::int64_t sample_log_series(double p, RandomSource& rng);
std::int64_t sample_geometric(double z, RandomSource& rng);

}  // namespace gitgraph

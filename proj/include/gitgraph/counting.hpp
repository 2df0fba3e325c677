#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

namespace gitgraph {

using big_int = boost::multiprecision::cpp_int;
using big_rat = boost::multiprecision::cpp_rational;

// C(n, r), zero whenever r < 0, n < 0 or r > n. Multiplicative formula,
// O(min(r, n-r)) big-integer operations.
big_int binomial(std::int64_t n, std::int64_t r);

// Table of g(n, k) = number of Git graphs with n vertices, k of them black,
// built from the recurrence
//   g(n,k) = g(n-1,k-1) + (k-1) * sum_{m <= n-2} g(m,k-1)
// with per-k running prefix sums, so the whole table costs O(n_max^2)
// big-integer additions.
class CountTable {
 public:
  explicit CountTable(std::int64_t n_max);

  std::int64_t n_max() const { return n_max_; }
  const big_int& count(std::int64_t n, std::int64_t k) const;  // 0 out of range
  const std::vector<big_int>& row(std::int64_t n) const;       // g(n, 0..n)
  big_int total(std::int64_t n) const;                         // g_n, row sum

 private:
  std::int64_t n_max_;
  std::vector<std::vector<big_int>> g_;
};

// Single row g(n, 0..n) with O(n) memory, for sizes where the full table
// would be too large.
std::vector<big_int> count_row(std::int64_t n);

// Unsigned Stirling numbers of the first kind [k, f] (permutations of k
// elements with f cycles).
class StirlingTable {
 public:
  explicit StirlingTable(std::int64_t k_max);

  std::int64_t k_max() const { return k_max_; }
  const big_int& cycles(std::int64_t k, std::int64_t f) const;  // 0 out of range

 private:
  std::int64_t k_max_;
  std::vector<std::vector<big_int>> s_;
};

// g(n, k) via the closed form: 1 if k = n, otherwise
// sum_{f=1}^{k-1} [k,f] * C(n-k-1, k-f-1). Requires k <= stirling.k_max().
big_int count_closed_form(std::int64_t n, std::int64_t k, const StirlingTable& stirling);

// Cardinality of the superset model H: h(n,k) = (k-1)! * C(n-2, k-2).
// The rejection sampler accepts with probability g(n,k)/h(n,k).
big_int superset_count_h(std::int64_t n, std::int64_t k);

// Positive-weight pairs (f, [k,f] * C(n-k-1, k-f-1)); weights sum to g(n,k).
// Point mass at f = k when k = n.
std::vector<std::pair<std::int64_t, big_int>> free_vertex_weights(
    std::int64_t n, std::int64_t k, const StirlingTable& stirling);

// Exact distribution of the number of black vertices at fixed size n.
struct KDistribution {
  std::vector<big_rat> prob;  // indexed by k in 0..n
  big_rat mean;
  big_rat variance;
};

// Uniform model: P(k) = g(n,k) / g_n.
KDistribution k_distribution_uniform(const std::vector<big_int>& row);

// Labeled-main model at fixed n: P(k) proportional to g(n,k) * u^k / k!.
KDistribution k_distribution_labeled(const std::vector<big_int>& row, const big_rat& u);

}  // namespace gitgraph

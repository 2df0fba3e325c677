#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gitgraph/graph.hpp"

namespace gitgraph {

// Output of a brute-force enumeration: canonical encodings, pairwise
// distinct.
struct EnumerationResult {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::optional<std::int64_t> f;
  std::vector<std::string> items;

  std::size_t cardinality() const { return items.size(); }
};

// All Git graphs with n vertices and k black ones. Guarded at n <= 12.
std::vector<GitGraph> enumerate_git_graphs_full(std::int64_t n, std::int64_t k);
EnumerationResult enumerate_git_graphs(std::int64_t n, std::int64_t k);

// All cyclariums with n vertices and k labels. Guarded at n <= 10.
std::vector<Cyclarium> enumerate_cyclariums_full(std::int64_t n, std::int64_t k);
EnumerationResult enumerate_cyclariums(std::int64_t n, std::int64_t k);

struct ChiSquareResult {
  double statistic = 0.0;
  std::int64_t degrees = 0;
  double threshold = 0.0;  // 0.999 chi-square quantile
  bool pass = false;
  std::vector<std::string> foreign;  // encodings outside the universe
};

// Pearson goodness-of-fit against the uniform law on the universe, at
// significance 0.001. Any observed encoding outside the universe is a
// sampler bug and is reported in `foreign` (pass = false).
ChiSquareResult chi_square_uniformity(const std::map<std::string, std::uint64_t>& observed,
                                      const EnumerationResult& universe);

struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double se_mean = 0.0;
  double se_variance = 0.0;  // normal approximation
};

Moments empirical_moments(std::span<const double> samples);

}  // namespace gitgraph

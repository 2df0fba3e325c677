#include "gitgraph/sampling.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "gitgraph/tuning.hpp"

namespace gitgraph {

bool BoltzmannParams::valid() const {
  return z > 0.0 && z < 1.0 && u > 0.0 && u * z * z / (1.0 - z) < 1.0;
}

bool rejection_regime_ok(std::int64_t n, std::int64_t k) {
  return static_cast<double>(k) <= 3.0 * std::sqrt(static_cast<double>(n));
}

std::vector<std::int64_t> sample_composition(std::int64_t m, std::int64_t p,
                                             bool positive, RandomSource& rng) {
  if (!positive) {
    if (p == 0) {
      if (m != 0) throw std::invalid_argument("weak composition needs p >= 1 when m > 0");
      return {};
    }
    auto parts = sample_composition(m + p, p, true, rng);
    for (auto& x : parts) --x;
    return parts;
  }
  if (p == 0) {
    if (m != 0) throw std::invalid_argument("no composition of m > 0 into 0 parts");
    return {};
  }
  if (m < p) throw std::invalid_argument("composition needs m >= p positive parts");
  // Stars and bars: a uniform (p-1)-subset of bar positions {1..m-1},
  // sampled with Floyd's algorithm.
  std::unordered_set<std::int64_t> bars;
  for (std::int64_t j = m - p + 1; j <= m - 1; ++j) {
    const std::int64_t t = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j)));
    if (!bars.insert(t).second) bars.insert(j);
  }
  std::vector<std::int64_t> sorted(bars.begin(), bars.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int64_t> parts;
  parts.reserve(static_cast<std::size_t>(p));
  std::int64_t prev = 0;
  for (const auto b : sorted) {
    parts.push_back(b - prev);
    prev = b;
  }
  parts.push_back(m - prev);
  return parts;
}

RejectionSample sample_rejection(std::int64_t n, std::int64_t k, RandomSource& rng) {
  if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (k == 0) {
    if (n > 0) throw std::invalid_argument("no Git graph with vertices but no main branch");
    return {GitGraph{}, 1};
  }
  if (k == 1) {
    if (n > 1) throw std::invalid_argument("g(n,1) = 0 for n > 1");
    return {GitGraph{1, {}}, 1};
  }

  RejectionSample result;
  std::vector<std::int64_t> starts(static_cast<std::size_t>(k) + 1, 0);
  for (;;) {
    ++result.trials;
    auto lengths = sample_composition(n - k, k - 1, /*positive=*/false, rng);
    bool accept = true;
    for (std::int64_t j = 2; j <= k; ++j) {
      const std::int64_t s =
          1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j - 1)));
      starts[static_cast<std::size_t>(j)] = s;
      if (lengths[static_cast<std::size_t>(j - 2)] == 0 && s != 1) accept = false;
    }
    if (!accept) continue;
    GitGraph g;
    g.main_length = k;
    for (std::int64_t j = 2; j <= k; ++j) {
      const std::int64_t len = lengths[static_cast<std::size_t>(j - 2)];
      if (len > 0) g.branches.push_back(Branch{starts[static_cast<std::size_t>(j)], j, len});
    }
    result.graph = std::move(g);
    return result;
  }
}

std::vector<std::vector<std::int64_t>> sample_permutation_with_cycles(
    std::int64_t k, std::int64_t f, RandomSource& rng, const StirlingTable& stirling) {
  if (f < 1 || f > k) throw std::invalid_argument("need 1 <= f <= k");
  if (k > stirling.k_max()) throw std::invalid_argument("Stirling table too small");

  // Top-down: decide for each element whether it forms a singleton cycle.
  std::vector<bool> singleton(static_cast<std::size_t>(k) + 1, false);
  std::int64_t f_cur = f;
  for (std::int64_t i = k; i >= 1; --i) {
    const big_int& total = stirling.cycles(i, f_cur);
    assert(total > 0);
    const big_int& single_weight = stirling.cycles(i - 1, f_cur - 1);
    bool single;
    if (single_weight >= total)
      single = true;  // forced, e.g. f_cur == i
    else
      single = rng.below_big(total) < single_weight;
    if (single) {
      singleton[static_cast<std::size_t>(i)] = true;
      --f_cur;
    }
  }
  assert(f_cur == 0);

  // Bottom-up: insert each non-singleton element after a uniform existing one.
  std::vector<std::int64_t> next(static_cast<std::size_t>(k) + 1, 0);
  for (std::int64_t i = 1; i <= k; ++i) {
    if (singleton[static_cast<std::size_t>(i)]) {
      next[static_cast<std::size_t>(i)] = i;
    } else {
      const std::int64_t x =
          1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(i - 1)));
      next[static_cast<std::size_t>(i)] = next[static_cast<std::size_t>(x)];
      next[static_cast<std::size_t>(x)] = i;
    }
  }

  std::vector<std::vector<std::int64_t>> cycles;
  std::vector<bool> visited(static_cast<std::size_t>(k) + 1, false);
  for (std::int64_t s = 1; s <= k; ++s) {
    if (visited[static_cast<std::size_t>(s)]) continue;
    std::vector<std::int64_t> cycle;
    std::int64_t v = s;
    do {
      visited[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
      v = next[static_cast<std::size_t>(v)];
    } while (v != s);
    cycles.push_back(std::move(cycle));
  }
  assert(static_cast<std::int64_t>(cycles.size()) == f);
  return cycles;
}

namespace {

// Builds the cyclarium from label cycles and a positive composition, with
// chain lengths assigned to the non-maximum vertices in increasing label
// order, then maps it through the bijection.
GitGraph assemble_and_map(const std::vector<std::vector<std::int64_t>>& cycles,
                          const std::vector<std::int64_t>& composition) {
  Cyclarium c;
  c.cycles.reserve(cycles.size());
  struct Slot {
    std::int64_t label;
    std::size_t cycle;
    std::size_t pos;
  };
  std::vector<Slot> slots;
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    const auto& cyc = cycles[ci];
    const std::int64_t max_label = *std::max_element(cyc.begin(), cyc.end());
    std::vector<Cyclarium::Vertex> verts;
    verts.reserve(cyc.size());
    for (std::size_t pi = 0; pi < cyc.size(); ++pi) {
      verts.push_back(Cyclarium::Vertex{cyc[pi], 0});
      if (cyc[pi] != max_label) slots.push_back(Slot{cyc[pi], ci, pi});
    }
    c.cycles.push_back(std::move(verts));
  }
  assert(slots.size() == composition.size());
  std::sort(slots.begin(), slots.end(),
            [](const Slot& a, const Slot& b) { return a.label < b.label; });
  for (std::size_t i = 0; i < slots.size(); ++i)
    c.cycles[slots[i].cycle][slots[i].pos].chain = composition[i];
  return cyclarium_to_git_graph(c);
}

std::vector<std::vector<std::int64_t>> cycles_of_permutation(
    const std::vector<std::int64_t>& perm) {
  const std::int64_t k = static_cast<std::int64_t>(perm.size()) - 1;
  std::vector<std::vector<std::int64_t>> cycles;
  std::vector<bool> visited(perm.size(), false);
  for (std::int64_t s = 1; s <= k; ++s) {
    if (visited[static_cast<std::size_t>(s)]) continue;
    std::vector<std::int64_t> cycle;
    std::int64_t v = s;
    do {
      visited[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
      v = perm[static_cast<std::size_t>(v)];
    } while (v != s);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

GitGraph sample_exact_tableless(std::int64_t n, std::int64_t k, RandomSource& rng) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (k == n) return GitGraph{k, {}};
  if (k == 1) throw std::invalid_argument("g(n,1) = 0 for n > 1");

  const std::int64_t m = n - k - 1;                  // binomial upper argument
  const std::int64_t r_cap = std::min(k - 2, m);     // feasible r = k-1-f
  const std::int64_t r_star = std::clamp(m / 2, std::int64_t{0}, r_cap);

  std::vector<std::int64_t> perm(static_cast<std::size_t>(k) + 1);
  for (;;) {
    // Uniform permutation of 1..k.
    std::iota(perm.begin(), perm.end(), 0);
    for (std::int64_t i = k; i >= 2; --i) {
      const std::int64_t j =
          1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(i)));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    auto cycles = cycles_of_permutation(perm);
    const std::int64_t f = static_cast<std::int64_t>(cycles.size());
    const std::int64_t r = k - 1 - f;
    if (r > r_cap) continue;  // C(m, r) = 0 or out of the feasible band

    // Accept with probability C(m,r)/C(m,r_star), an exact product of small
    // rationals along the Pascal row.
    if (r != r_star) {
      big_int num = 1, den = 1;
      if (r < r_star) {
        for (std::int64_t i = r + 1; i <= r_star; ++i) {
          num *= i;
          den *= m - i + 1;
        }
      } else {
        for (std::int64_t i = r_star; i <= r - 1; ++i) {
          num *= m - i;
          den *= i + 1;
        }
      }
      if (rng.below_big(den) >= num) continue;
    }

    auto composition = sample_composition(n - k, k - f, /*positive=*/true, rng);
    return assemble_and_map(cycles, composition);
  }
}

GitGraph sample_exact(std::int64_t n, std::int64_t k, std::optional<std::int64_t> f,
                      RandomSource& rng, const StirlingTable& stirling) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (k > stirling.k_max()) {
    if (!f) return sample_exact_tableless(n, k, rng);
    throw std::invalid_argument("Stirling table too small for fixed-f sampling");
  }

  auto weights = free_vertex_weights(n, k, stirling);
  if (weights.empty()) throw std::invalid_argument("empty class: no Git graph with (n, k)");

  std::int64_t f_val;
  if (f) {
    f_val = *f;
    const bool feasible = std::any_of(weights.begin(), weights.end(),
                                      [&](const auto& w) { return w.first == f_val; });
    if (!feasible) throw std::invalid_argument("no Git graph with the requested (n, k, f)");
  } else {
    big_int total = 0;
    for (const auto& [fv, w] : weights) total += w;
    big_int draw = rng.below_big(total);
    f_val = weights.back().first;
    for (const auto& [fv, w] : weights) {
      if (draw < w) {
        f_val = fv;
        break;
      }
      draw -= w;
    }
  }

  auto cycles = sample_permutation_with_cycles(k, f_val, rng, stirling);
  auto composition = sample_composition(n - k, k - f_val, /*positive=*/true, rng);
  return assemble_and_map(cycles, composition);
}

GitGraph sample_exact_size_only(std::int64_t n, const CountTable& counts,
                                const StirlingTable& stirling, RandomSource& rng) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > counts.n_max()) throw std::invalid_argument("count table too small");
  if (n == 0) return GitGraph{};
  const auto& row = counts.row(n);
  big_int total = 0;
  for (const auto& w : row) total += w;
  big_int draw = rng.below_big(total);
  std::int64_t k = n;
  for (std::int64_t kk = 0; kk <= n; ++kk) {
    const auto& w = row[static_cast<std::size_t>(kk)];
    if (draw < w) {
      k = kk;
      break;
    }
    draw -= w;
  }
  return sample_exact(n, k, std::nullopt, rng, stirling);
}

std::int64_t sample_poisson(double lambda, RandomSource& rng) {
  if (lambda < 0.0) throw std::domain_error("lambda must be nonnegative");
  if (lambda == 0.0) return 0;
  // Keep the inversion products in normal double range.
  if (lambda > 700.0)
    return sample_poisson(lambda / 2.0, rng) + sample_poisson(lambda / 2.0, rng);
  const double u = rng.real01();
  double p = std::exp(-lambda);
  double cum = p;
  std::int64_t j = 0;
  while (u >= cum) {
    ++j;
    p *= lambda / static_cast<double>(j);
    cum += p;
    if (p == 0.0) break;
  }
  return j;
}

std::int64_t sample_log_series(double p, RandomSource& rng) {
  if (!(p > 0.0) || !(p < 1.0)) throw std::domain_error("p must lie in (0,1)");
  const double u = rng.real01();
  double t = p / (-std::log1p(-p));
  double cum = t;
  std::int64_t x = 1;
  while (u >= cum) {
    ++x;
    t *= p * static_cast<double>(x - 1) / static_cast<double>(x);
    cum += t;
    if (t == 0.0) break;
  }
  return x;
}

std::int64_t sample_geometric(double z, RandomSource& rng) {
  if (!(z > 0.0) || !(z < 1.0)) throw std::domain_error("z must lie in (0,1)");
  const double u = rng.real01_open();
  const double m = std::floor(std::log(u) / std::log(z));
  return m < 0.0 ? 0 : static_cast<std::int64_t>(m);
}

GitGraph sample_boltzmann(const BoltzmannParams& params, RandomSource& rng) {
  if (!params.valid()) throw std::domain_error("(z, u) outside the convergence domain");
  const double z = params.z;
  const double u = params.u;
  const double lambda = log_gf(z, u);
  const double p = u * z * z / (1.0 - z);

  const std::int64_t f = sample_poisson(lambda, rng);
  std::vector<std::int64_t> cycle_lengths(static_cast<std::size_t>(f));
  std::int64_t k = 0;
  for (auto& len : cycle_lengths) {
    len = sample_log_series(p, rng);
    k += len;
  }

  GitGraph g;
  g.main_length = k;
  if (k == 0) return g;

  // Size-biased extraction marks the free vertices; each mark lands at the
  // running remainder, so marks are distinct and v[0] is always marked last.
  std::vector<char> marked(static_cast<std::size_t>(k), 0);
  std::int64_t remaining = k;
  while (remaining > 0) {
    const auto target = rng.below(static_cast<std::uint64_t>(remaining));
    std::size_t idx = 0;
    std::uint64_t acc = 0;
    for (;; ++idx) {
      acc += static_cast<std::uint64_t>(cycle_lengths[idx]);
      if (acc > target) break;
    }
    const std::int64_t x = cycle_lengths[idx];
    marked[static_cast<std::size_t>(remaining - x)] = 1;
    remaining -= x;
    cycle_lengths[idx] = cycle_lengths.back();
    cycle_lengths.pop_back();
  }

  g.branches.reserve(static_cast<std::size_t>(k - f));
  for (std::int64_t j = 1; j < k; ++j) {
    if (marked[static_cast<std::size_t>(j)]) continue;
    const std::int64_t i =
        static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j)));
    const std::int64_t len = 1 + sample_geometric(z, rng);
    g.branches.push_back(Branch{i + 1, j + 1, len});
  }
  return g;
}

}  // namespace gitgraph

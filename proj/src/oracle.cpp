#include "gitgraph/oracle.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gitgraph {

namespace {

void compositions_rec(std::int64_t m, std::int64_t p, std::vector<std::int64_t>& acc,
                      const std::function<void(const std::vector<std::int64_t>&)>& emit) {
  if (p == 1) {
    acc.push_back(m);
    emit(acc);
    acc.pop_back();
    return;
  }
  for (std::int64_t first = 1; first <= m - (p - 1); ++first) {
    acc.push_back(first);
    compositions_rec(m - first, p - 1, acc, emit);
    acc.pop_back();
  }
}

// All compositions of m into p positive parts.
void for_each_composition(std::int64_t m, std::int64_t p,
                          const std::function<void(const std::vector<std::int64_t>&)>& emit) {
  if (p == 0) {
    if (m == 0) {
      std::vector<std::int64_t> empty;
      emit(empty);
    }
    return;
  }
  if (m < p) return;
  std::vector<std::int64_t> acc;
  compositions_rec(m, p, acc, emit);
}

}  // namespace

std::vector<GitGraph> enumerate_git_graphs_full(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (n > 12) throw std::invalid_argument("enumeration guarded at n <= 12");
  std::vector<GitGraph> out;
  if (k == 0) {
    if (n == 0) out.push_back(GitGraph{});
    return out;
  }
  const std::int64_t whites = n - k;
  // Choose the subset of end positions within {2..k}, then lengths, then
  // starts.
  const std::int64_t subsets = std::int64_t{1} << (k - 1);
  for (std::int64_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::int64_t> ends;
    for (std::int64_t b = 0; b < k - 1; ++b)
      if (mask & (std::int64_t{1} << b)) ends.push_back(b + 2);
    const auto branches = static_cast<std::int64_t>(ends.size());
    if (branches == 0) {
      if (whites == 0) out.push_back(GitGraph{k, {}});
      continue;
    }
    if (whites < branches) continue;
    for_each_composition(whites, branches, [&](const std::vector<std::int64_t>& lens) {
      // Odometer over start choices: end e admits starts 1..e-1.
      std::vector<std::int64_t> starts(ends.size(), 1);
      for (;;) {
        GitGraph g;
        g.main_length = k;
        for (std::size_t i = 0; i < ends.size(); ++i)
          g.branches.push_back(Branch{starts[i], ends[i], lens[i]});
        out.push_back(std::move(g));
        std::size_t pos = 0;
        while (pos < starts.size()) {
          if (++starts[pos] < ends[pos]) break;
          starts[pos] = 1;
          ++pos;
        }
        if (pos == starts.size()) break;
      }
    });
  }
  return out;
}

EnumerationResult enumerate_git_graphs(std::int64_t n, std::int64_t k) {
  EnumerationResult result;
  result.n = n;
  result.k = k;
  for (const auto& g : enumerate_git_graphs_full(n, k))
    result.items.push_back(canonical_encode(g));
  std::sort(result.items.begin(), result.items.end());
  if (std::adjacent_find(result.items.begin(), result.items.end()) != result.items.end())
    throw std::logic_error("enumeration produced duplicate encodings");
  return result;
}

std::vector<Cyclarium> enumerate_cyclariums_full(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (n > 10) throw std::invalid_argument("enumeration guarded at n <= 10");
  std::vector<Cyclarium> out;
  if (k == 0) {
    if (n == 0) out.push_back(Cyclarium{});
    return out;
  }
  std::vector<std::int64_t> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    // Cycles of i -> perm[i-1].
    std::vector<std::vector<std::int64_t>> cycles;
    std::vector<bool> visited(static_cast<std::size_t>(k) + 1, false);
    for (std::int64_t s = 1; s <= k; ++s) {
      if (visited[static_cast<std::size_t>(s)]) continue;
      std::vector<std::int64_t> cycle;
      std::int64_t v = s;
      do {
        visited[static_cast<std::size_t>(v)] = true;
        cycle.push_back(v);
        v = perm[static_cast<std::size_t>(v - 1)];
      } while (v != s);
      cycles.push_back(std::move(cycle));
    }
    const auto f = static_cast<std::int64_t>(cycles.size());
    struct Slot {
      std::int64_t label;
      std::size_t cycle;
      std::size_t pos;
    };
    std::vector<Slot> slots;
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      const std::int64_t max_label =
          *std::max_element(cycles[ci].begin(), cycles[ci].end());
      for (std::size_t pi = 0; pi < cycles[ci].size(); ++pi)
        if (cycles[ci][pi] != max_label)
          slots.push_back(Slot{cycles[ci][pi], ci, pi});
    }
    std::sort(slots.begin(), slots.end(),
              [](const Slot& a, const Slot& b) { return a.label < b.label; });
    for_each_composition(n - k, k - f, [&](const std::vector<std::int64_t>& lens) {
      Cyclarium c;
      c.cycles.reserve(cycles.size());
      for (const auto& cyc : cycles) {
        std::vector<Cyclarium::Vertex> verts;
        for (const auto label : cyc) verts.push_back(Cyclarium::Vertex{label, 0});
        c.cycles.push_back(std::move(verts));
      }
      for (std::size_t i = 0; i < slots.size(); ++i)
        c.cycles[slots[i].cycle][slots[i].pos].chain = lens[i];
      out.push_back(std::move(c));
    });
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

EnumerationResult enumerate_cyclariums(std::int64_t n, std::int64_t k) {
  EnumerationResult result;
  result.n = n;
  result.k = k;
  for (const auto& c : enumerate_cyclariums_full(n, k))
    result.items.push_back(canonical_encode(c));
  std::sort(result.items.begin(), result.items.end());
  if (std::adjacent_find(result.items.begin(), result.items.end()) != result.items.end())
    throw std::logic_error("enumeration produced duplicate encodings");
  return result;
}

ChiSquareResult chi_square_uniformity(const std::map<std::string, std::uint64_t>& observed,
                                      const EnumerationResult& universe) {
  ChiSquareResult result;
  if (universe.items.empty()) throw std::invalid_argument("empty universe");

  std::uint64_t total = 0;
  for (const auto& [enc, cnt] : observed) {
    total += cnt;
    if (!std::binary_search(universe.items.begin(), universe.items.end(), enc))
      result.foreign.push_back(enc);
  }
  const auto classes = universe.items.size();
  if (total < 20 * classes)
    throw std::invalid_argument("need at least 20 samples per class");

  const double expected = static_cast<double>(total) / static_cast<double>(classes);
  double stat = 0.0;
  for (const auto& enc : universe.items) {
    const auto it = observed.find(enc);
    const double o = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    stat += (o - expected) * (o - expected) / expected;
  }
  result.statistic = stat;
  result.degrees = static_cast<std::int64_t>(classes) - 1;
  boost::math::chi_squared dist(static_cast<double>(result.degrees));
  result.threshold = boost::math::quantile(dist, 0.999);
  result.pass = result.foreign.empty() && stat < result.threshold;
  return result;
}

Moments empirical_moments(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  Moments m;
  m.count = samples.size();
  const double n = static_cast<double>(samples.size());
  m.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double ss = 0.0;
  for (const double x : samples) ss += (x - m.mean) * (x - m.mean);
  m.variance = samples.size() > 1 ? ss / (n - 1.0) : 0.0;
  m.se_mean = std::sqrt(m.variance / n);
  m.se_variance = samples.size() > 1 ? m.variance * std::sqrt(2.0 / (n - 1.0)) : 0.0;
  return m;
}

}  // namespace gitgraph

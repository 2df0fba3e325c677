#include "gitgraph/counting.hpp"

#include <stdexcept>

namespace gitgraph {

big_int binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  big_int result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= (n - r + i);
    result /= i;  // exact at every step
  }
  return result;
}

namespace {

// Shared builder for the full table and the single-row variant. `keep_all`
// retains every row; otherwise only the last row survives.
std::vector<std::vector<big_int>> build_count_rows(std::int64_t n_max, bool keep_all) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<std::vector<big_int>> rows;
  // prefix[k] = sum_{m <= n-2} g(m, k), maintained incrementally.
  std::vector<big_int> prefix(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<big_int> prev, prev2;  // rows n-1 and n-2 when streaming

  std::vector<big_int> row0{1};  // g(0,0) = 1
  if (keep_all) rows.push_back(row0);
  prev = std::move(row0);

  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (n >= 2) {
      const auto& older = keep_all ? rows[static_cast<std::size_t>(n - 2)] : prev2;
      for (std::size_t k = 0; k < older.size(); ++k) prefix[k] += older[k];
    }
    std::vector<big_int> row(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t k = 1; k <= n; ++k) {
      big_int v = (k - 1 < static_cast<std::int64_t>(prev.size()))
                      ? prev[static_cast<std::size_t>(k - 1)]
                      : big_int(0);
      if (k >= 2) v += (k - 1) * prefix[static_cast<std::size_t>(k - 1)];
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
    if (keep_all) {
      rows.push_back(row);
      prev = std::move(row);
    } else {
      prev2 = std::move(prev);
      prev = std::move(row);
    }
  }
  if (!keep_all) rows.push_back(std::move(prev));
  return rows;
}

const big_int& zero_big() {
  static const big_int z = 0;
  return z;
}

}  // namespace

CountTable::CountTable(std::int64_t n_max)
    : n_max_(n_max), g_(build_count_rows(n_max, /*keep_all=*/true)) {}

const big_int& CountTable::count(std::int64_t n, std::int64_t k) const {
  if (n < 0 || n > n_max_) throw std::out_of_range("n outside count table");
  if (k < 0 || k > n) return zero_big();
  return g_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<big_int>& CountTable::row(std::int64_t n) const {
  if (n < 0 || n > n_max_) throw std::out_of_range("n outside count table");
  return g_[static_cast<std::size_t>(n)];
}

big_int CountTable::total(std::int64_t n) const {
  big_int s = 0;
  for (const auto& v : row(n)) s += v;
  return s;
}

std::vector<big_int> count_row(std::int64_t n) {
  return build_count_rows(n, /*keep_all=*/false).back();
}

StirlingTable::StirlingTable(std::int64_t k_max) : k_max_(k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  s_.resize(static_cast<std::size_t>(k_max) + 1);
  s_[0] = {1};
  for (std::int64_t k = 1; k <= k_max; ++k) {
    auto& row = s_[static_cast<std::size_t>(k)];
    const auto& prev = s_[static_cast<std::size_t>(k - 1)];
    row.assign(static_cast<std::size_t>(k) + 1, 0);
    for (std::int64_t f = 1; f <= k; ++f) {
      big_int v = (f - 1 < static_cast<std::int64_t>(prev.size()))
                      ? prev[static_cast<std::size_t>(f - 1)]
                      : big_int(0);
      if (f < k) v += (k - 1) * prev[static_cast<std::size_t>(f)];
      row[static_cast<std::size_t>(f)] = std::move(v);
    }
  }
}

const big_int& StirlingTable::cycles(std::int64_t k, std::int64_t f) const {
  if (k < 0 || k > k_max_) throw std::out_of_range("k outside Stirling table");
  if (f < 0 || f > k) return zero_big();
  return s_[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)];
}

big_int count_closed_form(std::int64_t n, std::int64_t k, const StirlingTable& stirling) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (k == n) return 1;
  big_int total = 0;
  for (std::int64_t f = 1; f <= k - 1; ++f)
    total += stirling.cycles(k, f) * binomial(n - k - 1, k - f - 1);
  return total;
}

big_int superset_count_h(std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (k == 1) return n == 1 ? 1 : 0;
  big_int result = binomial(n - 2, k - 2);
  for (std::int64_t i = 2; i < k; ++i) result *= i;  // (k-1)!
  return result;
}

std::vector<std::pair<std::int64_t, big_int>> free_vertex_weights(
    std::int64_t n, std::int64_t k, const StirlingTable& stirling) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  std::vector<std::pair<std::int64_t, big_int>> weights;
  if (k == n) {
    weights.emplace_back(k, 1);
    return weights;
  }
  const std::int64_t f_lo = std::max<std::int64_t>(1, 2 * k - n);
  for (std::int64_t f = f_lo; f <= k - 1; ++f) {
    big_int w = stirling.cycles(k, f) * binomial(n - k - 1, k - f - 1);
    if (w > 0) weights.emplace_back(f, std::move(w));
  }
  return weights;
}

namespace {

KDistribution distribution_from_weights(const std::vector<big_int>& weight) {
  big_int total = 0, first = 0, second = 0;
  for (std::size_t k = 0; k < weight.size(); ++k) {
    total += weight[k];
    first += big_int(k) * weight[k];
    second += big_int(k) * big_int(k) * weight[k];
  }
  if (total == 0) throw std::invalid_argument("empty distribution");
  KDistribution dist;
  dist.prob.reserve(weight.size());
  for (const auto& w : weight) dist.prob.emplace_back(big_rat(w) / big_rat(total));
  dist.mean = big_rat(first) / big_rat(total);
  dist.variance = big_rat(second) / big_rat(total) - dist.mean * dist.mean;
  return dist;
}

}  // namespace

KDistribution k_distribution_uniform(const std::vector<big_int>& row) {
  return distribution_from_weights(row);
}

KDistribution k_distribution_labeled(const std::vector<big_int>& row, const big_rat& u) {
  if (u <= 0) throw std::invalid_argument("u must be positive");
  const auto n = static_cast<std::int64_t>(row.size()) - 1;
  const big_int a = boost::multiprecision::numerator(u);
  const big_int b = boost::multiprecision::denominator(u);
  // Scale every weight g(n,k) u^k / k! by b^n n! so it becomes an integer:
  // W_k = g(n,k) a^k b^(n-k) (n!/k!).
  std::vector<big_int> weight(row.size());
  big_int a_pow = 1;                    // a^k
  std::vector<big_int> fall(row.size());  // n!/k!
  fall[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t k = n; k >= 1; --k)
    fall[static_cast<std::size_t>(k - 1)] = fall[static_cast<std::size_t>(k)] * k;
  big_int b_pow = boost::multiprecision::pow(b, static_cast<unsigned>(n));  // b^(n-k)
  for (std::int64_t k = 0; k <= n; ++k) {
    weight[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)] * a_pow * b_pow *
                                          fall[static_cast<std::size_t>(k)];
    a_pow *= a;
    if (k < n) b_pow /= b;
  }
  return distribution_from_weights(weight);
}

}  // namespace gitgraph

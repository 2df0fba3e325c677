#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "gitgraph/counting.hpp"

using namespace gitgraph;

namespace {

// Independent Stirling oracle: count permutations of k elements by cycle
// count, by exhaustion.
std::vector<std::int64_t> stirling_row_brute_force(std::int64_t k) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(k) + 1, 0);
  std::vector<std::int64_t> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<bool> visited(static_cast<std::size_t>(k), false);
    std::int64_t cycles = 0;
    for (std::int64_t s = 0; s < k; ++s) {
      if (visited[static_cast<std::size_t>(s)]) continue;
      ++cycles;
      std::int64_t v = s;
      while (!visited[static_cast<std::size_t>(v)]) {
        visited[static_cast<std::size_t>(v)] = true;
        v = perm[static_cast<std::size_t>(v)];
      }
    }
    ++row[static_cast<std::size_t>(cycles)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return row;
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == big_int("118264581564861424"));
}

TEST_CASE("count table spot values") {
  CountTable table(10);
  CHECK(table.count(0, 0) == 1);
  CHECK(table.count(1, 1) == 1);
  CHECK(table.count(5, 3) == 5);
  CHECK(table.count(7, 4) == 34);
  CHECK(table.count(8, 4) == 57);
  CHECK(table.count(6, 5) == 10);
  CHECK(table.total(5) == 13);
  for (std::int64_t n = 2; n <= 10; ++n) {
    CHECK(table.count(n, 1) == 0);
    CHECK(table.count(n, n) == 1);
    CHECK(table.count(n, 0) == 0);
  }
}

TEST_CASE("count_row matches the full table") {
  CountTable table(30);
  for (std::int64_t n : {0, 1, 2, 7, 19, 30}) CHECK(count_row(n) == table.row(n));
}

TEST_CASE("Stirling table against brute force") {
  StirlingTable stirling(12);
  CHECK(stirling.cycles(3, 2) == 3);
  CHECK(stirling.cycles(4, 2) == 11);
  for (std::int64_t k = 0; k <= 6; ++k) {
    const auto brute = stirling_row_brute_force(k);
    for (std::int64_t f = 0; f <= k; ++f)
      CHECK(stirling.cycles(k, f) == brute[static_cast<std::size_t>(f)]);
  }
  for (std::int64_t k = 1; k <= 12; ++k) {
    big_int row_sum = 0, factorial = 1;
    for (std::int64_t f = 0; f <= k; ++f) row_sum += stirling.cycles(k, f);
    for (std::int64_t i = 2; i <= k; ++i) factorial *= i;
    CHECK(row_sum == factorial);
    CHECK(stirling.cycles(k, k) == 1);
    CHECK(stirling.cycles(k, 0) == 0);
  }
}

TEST_CASE("closed form agrees with the recurrence") {
  CountTable table(25);
  StirlingTable stirling(25);
  for (std::int64_t n = 0; n <= 25; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      CHECK(count_closed_form(n, k, stirling) == table.count(n, k));
  CHECK(count_closed_form(5, 3, stirling) == 5);
  CHECK(count_closed_form(7, 4, stirling) == 34);
  CHECK_THROWS(count_closed_form(3, 4, stirling));
}

TEST_CASE("superset counts and the sandwich bound") {
  CHECK(superset_count_h(5, 3) == 6);
  CHECK(superset_count_h(7, 4) == 60);
  for (std::int64_t k = 2; k <= 8; ++k) {
    big_int factorial = 1;
    for (std::int64_t i = 2; i < k; ++i) factorial *= i;
    CHECK(superset_count_h(k, k) == factorial);
  }
  CountTable table(40);
  for (std::int64_t n = 1; n <= 40; ++n)
    for (std::int64_t k = 1; k <= n; ++k)
      CHECK(table.count(n, k) <= superset_count_h(n, k));
}

TEST_CASE("factorial lower bound g(2k-1, k) >= (k-1)!") {
  CountTable table(23);
  big_int factorial = 1;  // (k-1)!
  for (std::int64_t k = 2; k <= 12; ++k) {
    CHECK(table.count(2 * k - 1, k) >= factorial);
    factorial *= k;
  }
}

TEST_CASE("free-vertex weights") {
  StirlingTable stirling(10);
  auto w53 = free_vertex_weights(5, 3, stirling);
  REQUIRE(w53.size() == 2);
  CHECK(w53[0] == std::pair<std::int64_t, big_int>{1, 2});
  CHECK(w53[1] == std::pair<std::int64_t, big_int>{2, 3});

  auto w84 = free_vertex_weights(8, 4, stirling);
  REQUIRE(w84.size() == 3);
  CHECK(w84[0] == std::pair<std::int64_t, big_int>{1, 18});
  CHECK(w84[1] == std::pair<std::int64_t, big_int>{2, 33});
  CHECK(w84[2] == std::pair<std::int64_t, big_int>{3, 6});

  auto wnn = free_vertex_weights(6, 6, stirling);
  REQUIRE(wnn.size() == 1);
  CHECK(wnn[0] == std::pair<std::int64_t, big_int>{6, 1});

  CountTable table(10);
  for (std::int64_t n = 1; n <= 10; ++n)
    for (std::int64_t k = 1; k <= n; ++k) {
      big_int total = 0;
      for (const auto& [f, w] : free_vertex_weights(n, k, stirling)) total += w;
      CHECK(total == table.count(n, k));
    }
}

TEST_CASE("uniform k distribution at n = 5") {
  CountTable table(5);
  auto dist = k_distribution_uniform(table.row(5));
  REQUIRE(dist.prob.size() == 6);
  CHECK(dist.prob[0] == 0);
  CHECK(dist.prob[1] == 0);
  CHECK(dist.prob[2] == big_rat(1, 13));
  CHECK(dist.prob[3] == big_rat(5, 13));
  CHECK(dist.prob[4] == big_rat(6, 13));
  CHECK(dist.prob[5] == big_rat(1, 13));
  big_rat sum = 0;
  for (const auto& p : dist.prob) sum += p;
  CHECK(sum == 1);
}

TEST_CASE("labeled-main k distribution at n = 3, u = 2") {
  CountTable table(3);
  auto dist = k_distribution_labeled(table.row(3), big_rat(2));
  CHECK(dist.mean == big_rat(12, 5));
  big_rat sum = 0;
  for (const auto& p : dist.prob) sum += p;
  CHECK(sum == 1);
  // Non-integer u goes through the same scaled-integer path.
  auto half = k_distribution_labeled(table.row(3), big_rat(1, 2));
  big_rat sum_half = 0;
  for (const auto& p : half.prob) sum_half += p;
  CHECK(sum_half == 1);
}

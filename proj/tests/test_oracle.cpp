#include <doctest.h>

#include <cmath>
#include <map>

#include "gitgraph/counting.hpp"
#include "gitgraph/graph.hpp"
#include "gitgraph/oracle.hpp"

using namespace gitgraph;

TEST_CASE("git graph enumeration cardinalities") {
  CHECK(enumerate_git_graphs(5, 3).cardinality() == 5);
  for (std::int64_t n = 0; n <= 8; ++n) CHECK(enumerate_git_graphs(n, n).cardinality() == 1);
  CHECK(enumerate_git_graphs(6, 1).cardinality() == 0);
  CHECK(enumerate_git_graphs(1, 1).cardinality() == 1);

  auto graphs = enumerate_git_graphs_full(7, 4);
  CHECK(graphs.size() == 34);
  std::map<std::int64_t, int> f_histogram;
  for (const auto& g : graphs) {
    CHECK(!validate(g));
    CHECK(g.size() == 7);
    ++f_histogram[g.free_count()];
  }
  CHECK(f_histogram == std::map<std::int64_t, int>{{1, 6}, {2, 22}, {3, 6}});
}

TEST_CASE("enumeration agrees with the counting table up to n = 8") {
  CountTable table(8);
  for (std::int64_t n = 0; n <= 8; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      CHECK(big_int(enumerate_git_graphs(n, k).cardinality()) == table.count(n, k));
}

TEST_CASE("cyclarium enumeration") {
  auto result = enumerate_cyclariums(5, 3);
  CHECK(result.cardinality() == 5);
  for (std::int64_t k = 0; k <= 6; ++k) CHECK(enumerate_cyclariums(k, k).cardinality() == 1);
  for (std::int64_t n = 0; n <= 8; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      CHECK(enumerate_cyclariums(n, k).cardinality() ==
            enumerate_git_graphs(n, k).cardinality());
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS(enumerate_git_graphs(13, 4));
  CHECK_THROWS(enumerate_cyclariums(11, 4));
}

TEST_CASE("chi-square on equal counts passes with statistic 0") {
  auto universe = enumerate_git_graphs(5, 3);
  std::map<std::string, std::uint64_t> observed;
  for (const auto& enc : universe.items) observed[enc] = 1000;
  auto result = chi_square_uniformity(observed, universe);
  CHECK(result.statistic == 0.0);
  CHECK(result.degrees == 4);
  CHECK(result.pass);
}

TEST_CASE("chi-square rejects a degenerate sampler") {
  auto universe = enumerate_git_graphs(5, 3);
  std::map<std::string, std::uint64_t> observed;
  observed[universe.items.front()] = 5000;
  auto result = chi_square_uniformity(observed, universe);
  CHECK(result.statistic == doctest::Approx(4.0 * 5000.0));
  CHECK(!result.pass);
}

TEST_CASE("chi-square reports foreign encodings distinctly") {
  auto universe = enumerate_git_graphs(5, 3);
  std::map<std::string, std::uint64_t> observed;
  for (const auto& enc : universe.items) observed[enc] = 100;
  observed["not-an-encoding"] = 1;
  auto result = chi_square_uniformity(observed, universe);
  CHECK(result.foreign.size() == 1);
  CHECK(!result.pass);
}

TEST_CASE("chi-square requires enough samples") {
  auto universe = enumerate_git_graphs(5, 3);
  std::map<std::string, std::uint64_t> observed;
  for (const auto& enc : universe.items) observed[enc] = 3;
  CHECK_THROWS(chi_square_uniformity(observed, universe));
}

TEST_CASE("empirical moments") {
  std::vector<double> constant(50, 4.25);
  auto m = empirical_moments(constant);
  CHECK(m.mean == doctest::Approx(4.25));
  CHECK(m.variance == doctest::Approx(0.0));

  std::vector<double> values{1.0, 2.0, 3.0, 4.0, 5.0};
  auto v = empirical_moments(values);
  CHECK(v.mean == doctest::Approx(3.0));
  CHECK(v.variance == doctest::Approx(2.5));
  CHECK(v.se_mean == doctest::Approx(std::sqrt(2.5 / 5.0)));
  CHECK_THROWS(empirical_moments(std::span<const double>{}));
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "gitgraph/counting.hpp"
#include "gitgraph/tuning.hpp"

using namespace gitgraph;

namespace {

// ln of the truncated series sum_{n<=n_max} G~_n(u) z^n from the exact
// counting table.
double log_gf_series(double z, double u, const CountTable& table) {
  double total = 0.0;
  for (std::int64_t n = 0; n <= table.n_max(); ++n) {
    double gn = 0.0;
    double term = 1.0;  // u^k / k!
    for (std::int64_t k = 0; k <= n; ++k) {
      if (k > 0) term *= u / static_cast<double>(k);
      gn += table.count(n, k).convert_to<double>() * term;
    }
    total += gn * std::pow(z, static_cast<double>(n));
  }
  return std::log(total);
}

}  // namespace

TEST_CASE("log_gf values and domain") {
  CHECK(log_gf(0.4, 2.0) == doctest::Approx(1.5 * std::log(15.0 / 7.0)).epsilon(1e-12));
  CHECK(log_gf(0.4, 2.0) == doctest::Approx(1.1432).epsilon(1e-4));
  CHECK(log_gf(1e-9, 2.0) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(std::exp(log_gf(0.2, 0.7)) >= 1.0);
  CHECK_THROWS(log_gf(0.6, 2.0));   // past rho_2 = 1/2
  CHECK_THROWS(log_gf(-0.1, 2.0));
  CHECK_THROWS(log_gf(0.3, 0.0));
  CHECK(admissible(0.49, 2.0));
  CHECK(!admissible(0.5, 2.0));
}

TEST_CASE("rho/u round trips") {
  CHECK(rho_of_u(2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(u_of_rho(0.5) == doctest::Approx(2.0).epsilon(1e-15));
  for (double u : {0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 500.0})
    CHECK(u_of_rho(rho_of_u(u)) == doctest::Approx(u).epsilon(1e-12));
  CHECK(rho_of_u(1e-12) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS(rho_of_u(0.0));
  CHECK_THROWS(u_of_rho(1.5));
}

TEST_CASE("alpha targeting") {
  CHECK(u_of_alpha(1.0 / 3.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rho_of_u(u_of_alpha(1.0 / 3.0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(u_of_alpha(0.49) > 100.0);
  CHECK_THROWS(u_of_alpha(0.0));
  CHECK_THROWS(u_of_alpha(0.5));
  for (double alpha : {0.05, 0.2, 1.0 / 3.0, 0.45}) {
    const double rho = rho_of_u(u_of_alpha(alpha));
    CHECK((1.0 - rho) / (2.0 - rho) == doctest::Approx(alpha).epsilon(1e-12));
  }
}

TEST_CASE("closed-form derivatives match finite differences") {
  const double h = 1e-6;
  for (double u : {0.5, 1.0, 2.0, 5.0}) {
    const double rho = rho_of_u(u);
    for (double frac : {0.1, 0.3, 0.5, 0.8}) {
      const double z = frac * rho;
      const double dz = (log_gf(z + h, u) - log_gf(z - h, u)) / (2.0 * h);
      const double du = (log_gf(z, u + h) - log_gf(z, u - h)) / (2.0 * h);
      CHECK(expected_size(z, u) == doctest::Approx(z * dz).epsilon(1e-6));
      CHECK(expected_black(z, u) == doctest::Approx(u * du).epsilon(1e-6));
    }
  }
}

TEST_CASE("log_gf matches the truncated series from the counting table") {
  CountTable table(60);
  for (double u : {0.5, 1.0, 2.0, 4.0}) {
    const double rho = rho_of_u(u);
    for (double frac : {0.1, 0.25, 0.4, 0.6}) {
      const double z = frac * rho;
      CHECK(std::abs(log_gf(z, u) - log_gf_series(z, u, table)) < 1e-9);
    }
  }
}

TEST_CASE("expected size against the truncated series at (0.4, 2)") {
  // E[N] = sum n P(n) with P(n) = G~_n(u) z^n / G~(z,u). z/rho_u = 0.8 here,
  // so the series needs ~120 terms before the tail drops below 1e-6 relative.
  CountTable table(120);
  const double z = 0.4, u = 2.0;
  double total = 0.0, weighted = 0.0;
  for (std::int64_t n = 0; n <= table.n_max(); ++n) {
    double gn = 0.0, term = 1.0;
    for (std::int64_t k = 0; k <= n; ++k) {
      if (k > 0) term *= u / static_cast<double>(k);
      gn += table.count(n, k).convert_to<double>() * term;
    }
    const double w = gn * std::pow(z, static_cast<double>(n));
    total += w;
    weighted += static_cast<double>(n) * w;
  }
  CHECK(expected_size(z, u) == doctest::Approx(weighted / total).epsilon(1e-6));
}

TEST_CASE("solve_z hits the target and is monotone") {
  const double u = 2.0;
  std::vector<double> targets{1e3, 1e4, 1e5};
  double prev = 0.0;
  for (const double target : targets) {
    const double z = solve_z(target, u);
    CHECK(z > prev);
    CHECK(z < 0.5);
    CHECK(std::abs(expected_size(z, u) - target) / target < 1e-6);
    prev = z;
  }
  CHECK(solve_z(1e-6, 1.0) < 1e-5);
  CHECK_THROWS(solve_z(0.0, 2.0));
  CHECK_THROWS(solve_z(100.0, 0.0));
}

TEST_CASE("asymptotic moments") {
  auto [mean, variance] = asymptotic_moments(2.0, 3000);
  CHECK(mean == doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(variance == doctest::Approx(2000.0 / 9.0).epsilon(1e-12));
  auto [small_mean, small_var] = asymptotic_moments(1e-9, 1000);
  CHECK(small_mean / 1000.0 < 1e-3);
  CHECK_THROWS(asymptotic_moments(2.0, 0));
}

#include "gitgraph/tuning.hpp"

#include <cmath>
#include <stdexcept>

namespace gitgraph {

namespace {

constexpr double kSingularityMargin = 1e-12;

void require_admissible(double z, double u) {
  if (!admissible(z, u)) throw std::domain_error("(z, u) outside the convergence domain");
}

}  // namespace

bool admissible(double z, double u) {
  if (!(u > 0.0) || !(z > 0.0) || !(z < 1.0)) return false;
  if (!(u * z * z / (1.0 - z) < 1.0)) return false;
  return z <= (1.0 - kSingularityMargin) * rho_of_u(u);
}

double log_gf(double z, double u) {
  require_admissible(z, u);
  const double w = u * z * z / (1.0 - z);
  return -((1.0 - z) / z) * std::log1p(-w);
}

double rho_of_u(double u) {
  if (!(u > 0.0)) throw std::domain_error("u must be positive");
  // (sqrt(1+4u) - 1)/(2u), rationalized for small u.
  return 2.0 / (std::sqrt(1.0 + 4.0 * u) + 1.0);
}

double u_of_rho(double rho) {
  if (!(rho > 0.0) || !(rho < 1.0)) throw std::domain_error("rho must lie in (0,1)");
  return (1.0 - rho) / (rho * rho);
}

double u_of_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 0.5))
    throw std::domain_error("alpha must lie in (0, 1/2)");
  const double rho = (1.0 - 2.0 * alpha) / (1.0 - alpha);
  return u_of_rho(rho);
}

double expected_size(double z, double u) {
  require_admissible(z, u);
  const double w = u * z * z / (1.0 - z);
  return std::log1p(-w) / z + u * z * (2.0 - z) / ((1.0 - z) * (1.0 - w));
}

double expected_black(double z, double u) {
  require_admissible(z, u);
  const double w = u * z * z / (1.0 - z);
  return u * z / (1.0 - w);
}

double solve_z(double n_target, double u) {
  if (!(n_target > 0.0)) throw std::domain_error("target size must be positive");
  if (!(u > 0.0)) throw std::domain_error("u must be positive");
  double lo = 0.0;
  double hi = (1.0 - kSingularityMargin) * rho_of_u(u);
  if (expected_size(hi, u) < n_target)
    throw std::domain_error("target size unreachable before the singularity");
  double z = hi;
  for (int iter = 0; iter < 200; ++iter) {
    z = 0.5 * (lo + hi);
    const double value = expected_size(z, u);
    if (std::abs(value - n_target) <= 1e-9 * n_target) break;
    if (value < n_target)
      lo = z;
    else
      hi = z;
  }
  return z;
}

std::pair<double, double> asymptotic_moments(double u, std::int64_t n) {
  if (n < 1) throw std::domain_error("n must be positive");
  const double rho = rho_of_u(u);
  const double mean = static_cast<double>(n) * (1.0 - rho) / (2.0 - rho);
  const double variance = static_cast<double>(n) * rho * (1.0 - rho) /
                          ((2.0 - rho) * (2.0 - rho) * (2.0 - rho));
  return {mean, variance};
}

}  // namespace gitgraph

#pragma once

#include <cstdint>
#include <utility>

namespace gitgraph {

// Analytic layer around the closed form
//   G~(z, u) = (1 - u z^2/(1-z))^(-(1-z)/z),
// whose log drives the Boltzmann sampler's Poisson rate.

// True when 0 < z < 1, u > 0 and z stays a relative 1e-12 margin away from
// the singularity rho_u. Near-singularity requests fail loudly.
bool admissible(double z, double u);

// ln G~(z, u) = -((1-z)/z) ln(1 - u z^2/(1-z)).
double log_gf(double z, double u);

// Dominant singularity rho_u = (sqrt(1+4u) - 1)/(2u) and its inverse
// u = (1-rho)/rho^2.
double rho_of_u(double u);
double u_of_rho(double rho);

// Parameter u whose asymptotic black-vertex ratio (1-rho)/(2-rho) equals
// alpha, for alpha in (0, 1/2).
double u_of_alpha(double alpha);

// Boltzmann first moments E[N] = z d/dz ln G~ and E[K] = u d/du ln G~,
// in closed form.
double expected_size(double z, double u);
double expected_black(double z, double u);

// Bisection on z in (0, rho_u) for expected_size(z, u) = n_target.
// expected_size is strictly increasing in z and diverges at rho_u.
double solve_z(double n_target, double u);

// Asymptotic mean and variance of k under the labeled-main distribution at
// fixed size n: mean = n (1-rho)/(2-rho), variance = n rho(1-rho)/(2-rho)^3.
std::pair<double, double> asymptotic_moments(double u, std::int64_t n);

}  // namespace gitgraph

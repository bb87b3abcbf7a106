#include "radscat/verification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radscat/kernels.hpp"
#include "radscat/quadrature.hpp"

namespace radscat {

double GaussianSpec::operator()(double e) const {
  if (e < lower() || e > upper()) return 0.0;
  const double x = (e - center) / width;
  return std::exp(-0.5 * x * x);
}

namespace detail {

SmearedValue smeared_once(Family family, const Potential& pot, const PhysicalScale& scale,
                          const GaussianSpec& g, double r_max, std::size_t n_energy,
                          std::size_t n_radius) {
  const std::vector<double> energies = linspace(g.lower(), g.upper(), n_energy);
  const std::vector<double> ew = simpson_weights(n_energy, energies[1] - energies[0]);
  std::vector<ContinuumState> states;
  std::vector<double> weights(n_energy);
  std::vector<double> g2(n_energy);
  states.reserve(n_energy);
  for (std::size_t i = 0; i < n_energy; ++i) {
    states.push_back(continuum_state(family, pot, scale, energies[i]));
    weights[i] = ew[i] * g(energies[i]);
    g2[i] = ew[i] * g(energies[i]) * g(energies[i]);
  }

  const std::vector<double> radii = linspace(0.0, r_max, n_radius);
  const std::vector<Complex> psi = kernels::superpose(states, weights, radii);
  const std::vector<double> rw = simpson_weights(n_radius, radii[1] - radii[0]);
  std::vector<double> density(n_radius);
  for (std::size_t j = 0; j < n_radius; ++j) density[j] = rw[j] * std::norm(psi[j]);

  SmearedValue out;
  out.lhs = pairwise_sum(std::span<const double>(density));
  out.rhs = pairwise_sum(std::span<const double>(g2));
  return out;
}

}  // namespace detail

SmearedDeltaReport smeared_delta_check(Family family, const Potential& pot,
                                       const PhysicalScale& scale, const GaussianSpec& g,
                                       double r_max, const QuadSpec& quad) {
  if (!(g.width > 0.0) || !std::isfinite(g.center) || !std::isfinite(g.width))
    throw std::invalid_argument("test function width must be positive and finite");
  if (!(g.lower() > 0.0))
    throw std::invalid_argument("test function must vanish for E <= 0 (center - 6 width > 0)");
  if (!(r_max >= 10.0 * pot.outer_radius()) || !std::isfinite(r_max))
    throw std::invalid_argument("r_max must be at least 10 times the outer radius");
  if (quad.n_energy < 3 || quad.n_energy % 2 == 0 || quad.n_radius < 3 || quad.n_radius % 2 == 0)
    throw std::invalid_argument("quadrature node counts must be odd and at least 3");

  SmearedDeltaReport rep;
  rep.family = family;
  rep.g = g;
  rep.r_max = r_max;
  rep.quad = quad;

  const auto base = detail::smeared_once(family, pot, scale, g, r_max, quad.n_energy, quad.n_radius);
  const auto longer =
      detail::smeared_once(family, pot, scale, g, 2.0 * r_max, quad.n_energy, 2 * quad.n_radius - 1);
  const auto finer = detail::smeared_once(family, pot, scale, g, r_max, 2 * quad.n_energy - 1,
                                          2 * quad.n_radius - 1);

  rep.lhs = base.lhs;
  rep.rhs = base.rhs;
  rep.relative_error_base = std::abs(base.lhs - base.rhs) / base.rhs;
  rep.relative_error_r_doubled = std::abs(longer.lhs - longer.rhs) / longer.rhs;
  rep.relative_error_grid_doubled = std::abs(finer.lhs - finer.rhs) / finer.rhs;
  rep.relative_error = std::max(
      {rep.relative_error_base, rep.relative_error_r_doubled, rep.relative_error_grid_doubled});
  const double moved = std::max(std::abs(longer.lhs - base.lhs), std::abs(finer.lhs - base.lhs)) / base.rhs;
  rep.converged = moved < 0.1 * quad.tolerance;
  return rep;
}

}  // namespace radscat

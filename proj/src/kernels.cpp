#include "radscat/kernels.hpp"

#include <cmath>

#include "radscat/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace radscat::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

Complex transform_one(Family family, const Potential& pot, const PhysicalScale& scale,
                      const RadialSamples& psi, std::span<const double> weights, double energy) {
  const ContinuumState state = continuum_state(family, pot, scale, energy);
  std::vector<Complex> terms;
  terms.reserve(psi.values.size());
  for (std::size_t j = 0; j < psi.values.size(); ++j) {
    if (psi.values[j] == Complex(0.0)) continue;
    terms.push_back(weights[j] * std::conj(state(psi.radius(j))) * psi.values[j]);
  }
  return pairwise_sum(std::span<const Complex>(terms));
}

Complex superpose_one(std::span<const ContinuumState> states, std::span<const double> weights,
                      double r) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i)
    if (weights[i] != 0.0) acc += weights[i] * states[i](r);
  return acc;
}

}  // namespace

std::vector<JostPair> jost_grid(const Potential& pot, const PhysicalScale& scale,
                                std::span<const Complex> ks) {
  std::vector<JostPair> out(ks.size());
  parallel_for(ks.size(), [&](std::size_t i) { out[i] = jost(pot, scale, ks[i]); });
  return out;
}

std::vector<JostPair> jost_grid_serial(const Potential& pot, const PhysicalScale& scale,
                                       std::span<const Complex> ks) {
  std::vector<JostPair> out(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) out[i] = jost(pot, scale, ks[i]);
  return out;
}

std::vector<Complex> jost_plus_grid(const Potential& pot, const PhysicalScale& scale,
                                    std::span<const Complex> ks) {
  std::vector<Complex> out(ks.size());
  parallel_for(ks.size(), [&](std::size_t i) { out[i] = jost(pot, scale, ks[i]).plus; });
  return out;
}

std::vector<Complex> jost_plus_grid_serial(const Potential& pot, const PhysicalScale& scale,
                                           std::span<const Complex> ks) {
  std::vector<Complex> out(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) out[i] = jost(pot, scale, ks[i]).plus;
  return out;
}

std::vector<Complex> map_grid(const ComplexFunction& f, std::span<const Complex> points) {
  std::vector<Complex> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) { out[i] = f(points[i]); });
  return out;
}

std::vector<Complex> map_grid_serial(const ComplexFunction& f, std::span<const Complex> points) {
  std::vector<Complex> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = f(points[i]);
  return out;
}

std::vector<Complex> transform_grid(Family family, const Potential& pot, const PhysicalScale& scale,
                                    const RadialSamples& psi, std::span<const double> energies) {
  const auto w = simpson_weights(psi.values.size(), psi.spacing());
  std::vector<Complex> out(energies.size());
  parallel_for(energies.size(), [&](std::size_t i) {
    out[i] = transform_one(family, pot, scale, psi, w, energies[i]);
  });
  return out;
}

std::vector<Complex> transform_grid_serial(Family family, const Potential& pot,
                                           const PhysicalScale& scale, const RadialSamples& psi,
                                           std::span<const double> energies) {
  const auto w = simpson_weights(psi.values.size(), psi.spacing());
  std::vector<Complex> out(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i)
    out[i] = transform_one(family, pot, scale, psi, w, energies[i]);
  return out;
}

std::vector<Complex> superpose(std::span<const ContinuumState> states,
                               std::span<const double> weights, std::span<const double> radii) {
  std::vector<Complex> out(radii.size());
  parallel_for(radii.size(), [&](std::size_t j) { out[j] = superpose_one(states, weights, radii[j]); });
  return out;
}

std::vector<Complex> superpose_serial(std::span<const ContinuumState> states,
                                      std::span<const double> weights,
                                      std::span<const double> radii) {
  std::vector<Complex> out(radii.size());
  for (std::size_t j = 0; j < radii.size(); ++j) out[j] = superpose_one(states, weights, radii[j]);
  return out;
}

}  // namespace radscat::kernels

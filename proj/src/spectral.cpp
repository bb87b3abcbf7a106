#include "radscat/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "radscat/errors.hpp"
#include "radscat/kernels.hpp"

namespace radscat {

JostPair jost(const LayerSolution& sol) {
  return {sol.k(), Complex(0.0, -2.0) * sol.j4(), Complex(0.0, 2.0) * sol.j3()};
}

JostPair jost(const Potential& pot, const PhysicalScale& scale, Complex k) {
  return jost(solve_regular(pot, scale, k));
}

SMatrixValue s_matrix(const Potential& pot, const PhysicalScale& scale, Complex k) {
  const JostPair j = jost(pot, scale, k);
  if (!(std::abs(j.plus) > 1e-14 * std::abs(j.minus)))
    throw PoleError("J+ vanishes at k = (" + std::to_string(k.real()) + ", " +
                    std::to_string(k.imag()) + "): S has a pole here");
  return {k, j.minus / j.plus};
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::standing_wave: return "standing_wave";
    case Family::in: return "in";
    case Family::out: return "out";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "standing_wave" || name == "standing") return Family::standing_wave;
  if (name == "in" || name == "plus") return Family::in;
  if (name == "out" || name == "minus") return Family::out;
  throw std::invalid_argument("unknown eigenfunction family '" + std::string(name) + "'");
}

Complex standing_measure(const Potential& pot, const PhysicalScale& scale, Complex k) {
  const Complex j4 = solve_regular(pot, scale, k).j4();
  const Complex j4_mirror =
      k.imag() == 0.0 ? j4 : solve_regular(pot, scale, std::conj(k)).j4();
  return scale.kappa() / (4.0 * kPi * k) / (j4 * std::conj(j4_mirror));
}

Complex lippmann_measure(const PhysicalScale& scale, Complex k) {
  return scale.kappa() / (kPi * k);
}

double spectral_measure(Family family, const Potential& pot, const PhysicalScale& scale, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("spectral measures are defined for real k > 0");
  if (family == Family::standing_wave) return standing_measure(pot, scale, k).real();
  return lippmann_measure(scale, k).real();
}

ContinuumState::ContinuumState(Family family, double energy, Complex factor, LayerSolution sol)
    : family_(family), energy_(energy), factor_(factor), sol_(std::move(sol)) {}

ContinuumState continuum_state(Family family, const Potential& pot, const PhysicalScale& scale,
                               double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy))
    throw std::invalid_argument("continuum energies must be positive (spectrum is [0, inf))");
  const Complex k = sqrt_branch(Complex(scale.kappa() * energy));
  LayerSolution sol = solve_regular(pot, scale, k);
  const double kr = k.real();
  Complex factor;
  switch (family) {
    case Family::standing_wave: {
      const double j4sq = std::norm(sol.j4());
      factor = std::sqrt(scale.kappa() / (4.0 * kPi * kr) / j4sq);
      break;
    }
    case Family::in:
    case Family::out: {
      const JostPair j = jost(sol);
      const Complex jf = family == Family::in ? j.plus : j.minus;
      if (jf == Complex(0.0)) throw PoleError("Jost function vanishes on the physical line");
      factor = std::sqrt(scale.kappa() / (kPi * kr)) / jf;
      break;
    }
  }
  return ContinuumState(family, energy, factor, std::move(sol));
}

Complex eigenfunction(Family family, const Potential& pot, const PhysicalScale& scale,
                      double energy, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("radius must be non-negative");
  return continuum_state(family, pot, scale, energy)(r);
}

namespace detail {

void validate_transform_inputs(const RadialSamples& psi, std::span<const double> energies) {
  if (energies.empty()) throw std::invalid_argument("energy grid is empty");
  for (std::size_t i = 0; i < energies.size(); ++i) {
    if (!(energies[i] > 0.0)) throw std::invalid_argument("energy grid must be positive");
    if (i > 0 && !(energies[i] > energies[i - 1]))
      throw std::invalid_argument("energy grid must be strictly increasing");
  }
  if (!(psi.r_max > 0.0)) throw std::invalid_argument("r_max must be positive");
  if (psi.values.size() < 3 || psi.values.size() % 2 == 0)
    throw std::invalid_argument("psi needs an odd number (>= 3) of uniform samples");
}

}  // namespace detail

TransformResult energy_transform(Family family, const Potential& pot, const PhysicalScale& scale,
                                 const RadialSamples& psi, std::span<const double> energies) {
  detail::validate_transform_inputs(psi, energies);
  TransformResult out;
  out.phase_step = std::sqrt(scale.kappa() * energies.back()) * psi.spacing();
  out.undersampled = out.phase_step > 2.0 * kPi / 12.0;
  out.coefficients = kernels::transform_grid(family, pot, scale, psi, energies);
  return out;
}

}  // namespace radscat

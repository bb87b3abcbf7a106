#pragma once

// Data-parallel grid kernels. Every parallel kernel has a *_serial twin that
// runs the same per-point routine in a plain loop; the twins exist for the
// test suite (bitwise comparison) and for bench/.

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include "radscat/complex_math.hpp"
#include "radscat/potential.hpp"
#include "radscat/spectral.hpp"

namespace radscat::kernels {

int max_threads();

/// Runs fn(i) for i in [0, n) across the OpenMP team; the first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  std::exception_ptr error;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(radscat_parallel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

using ComplexFunction = std::function<Complex(Complex)>;

std::vector<JostPair> jost_grid(const Potential& pot, const PhysicalScale& scale,
                                std::span<const Complex> ks);
std::vector<JostPair> jost_grid_serial(const Potential& pot, const PhysicalScale& scale,
                                       std::span<const Complex> ks);

/// J+ only; the resonance scans need nothing else.
std::vector<Complex> jost_plus_grid(const Potential& pot, const PhysicalScale& scale,
                                    std::span<const Complex> ks);
std::vector<Complex> jost_plus_grid_serial(const Potential& pot, const PhysicalScale& scale,
                                           std::span<const Complex> ks);

/// f must be safe to call concurrently.
std::vector<Complex> map_grid(const ComplexFunction& f, std::span<const Complex> points);
std::vector<Complex> map_grid_serial(const ComplexFunction& f, std::span<const Complex> points);

//! Overlaps integral conj(<r|E_i>) psi(r) dr, one per energy (inputs assumed validated).
std::vector<Complex> transform_grid(Family family, const Potential& pot, const PhysicalScale& scale,
                                    const RadialSamples& psi, std::span<const double> energies);
std::vector<Complex> transform_grid_serial(Family family, const Potential& pot,
                                           const PhysicalScale& scale, const RadialSamples& psi,
                                           std::span<const double> energies);

//! Psi(r_j) = sum_i weights[i] * states[i](r_j), summed in index order for every r_j.
std::vector<Complex> superpose(std::span<const ContinuumState> states,
                               std::span<const double> weights, std::span<const double> radii);
std::vector<Complex> superpose_serial(std::span<const ContinuumState> states,
                                      std::span<const double> weights,
                                      std::span<const double> radii);

}  // namespace radscat::kernels

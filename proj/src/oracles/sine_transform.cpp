#include "radscat/oracles/sine_transform.hpp"

#include <cmath>
#include <vector>

#include "radscat/quadrature.hpp"

namespace radscat::oracles {

namespace {

// integral_0^R cos(d r) dr = sin(d R) / d
double cos_integral(double d, double r_max) {
  if (std::abs(d * r_max) < 1e-6) {
    const double x = d * r_max;
    return r_max * (1.0 - x * x / 6.0);
  }
  return std::sin(d * r_max) / d;
}

}  // namespace

double sine_overlap(double k1, double k2, double r_max) {
  return 0.5 * (cos_integral(k1 - k2, r_max) - cos_integral(k1 + k2, r_max));
}

double free_smeared_lhs(const PhysicalScale& scale, const GaussianSpec& g, double r_max,
                        std::size_t n_energy) {
  const std::vector<double> e = linspace(g.lower(), g.upper(), n_energy);
  const std::vector<double> w = simpson_weights(n_energy, e[1] - e[0]);
  std::vector<double> k(n_energy), a(n_energy);
  for (std::size_t i = 0; i < n_energy; ++i) {
    k[i] = std::sqrt(scale.kappa() * e[i]);
    // <r|E> = sqrt(kappa / (pi k)) sin(k r) when V = 0
    a[i] = w[i] * g(e[i]) * std::sqrt(scale.kappa() / (kPi * k[i]));
  }
  std::vector<double> rows(n_energy);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(n_energy); ++i) {
    std::vector<double> terms(n_energy);
    for (std::size_t j = 0; j < n_energy; ++j)
      terms[j] = a[static_cast<std::size_t>(i)] * a[j] * sine_overlap(k[static_cast<std::size_t>(i)], k[j], r_max);
    rows[static_cast<std::size_t>(i)] = pairwise_sum(std::span<const double>(terms));
  }
  return pairwise_sum(std::span<const double>(rows));
}

}  // namespace radscat::oracles

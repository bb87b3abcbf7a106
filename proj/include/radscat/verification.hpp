#pragma once

#include <cstddef>

#include "radscat/potential.hpp"
#include "radscat/spectral.hpp"

namespace radscat {

//! Gaussian test function g(E) = exp(-(E - center)^2 / (2 width^2)), cut at 6 widths.
struct GaussianSpec {
  double center = 0.0;
  double width = 1.0;

  double lower() const { return center - 6.0 * width; }
  double upper() const { return center + 6.0 * width; }
  double operator()(double e) const;
};

struct QuadSpec {
  std::size_t n_energy = 1201;  ///< Simpson nodes across [center - 6w, center + 6w], odd
  std::size_t n_radius = 4001;  ///< Simpson nodes across [0, r_max], odd
  double tolerance = 1e-3;      ///< refinements must move lhs by less than a tenth of this
};

struct SmearedDeltaReport {
  Family family = Family::standing_wave;
  GaussianSpec g;
  double r_max = 0.0;
  QuadSpec quad;
  double lhs = 0.0;  ///< integral_0^r_max |integral dE g(E) <r|E>|^2 dr
  double rhs = 0.0;  ///< integral dE g(E)^2
  double relative_error_base = 0.0;
  double relative_error_r_doubled = 0.0;
  double relative_error_grid_doubled = 0.0;
  double relative_error = 0.0;  ///< worst of the three
  bool converged = false;
};

//! Smeared orthonormality: the double energy integral of g g <E|r><r|E'> against |g|^2.
/*! Runs once as specified, once with r_max doubled and once with both grids doubled.
    Requires center - 6 width > 0 and r_max >= 10 b. */
SmearedDeltaReport smeared_delta_check(Family family, const Potential& pot,
                                       const PhysicalScale& scale, const GaussianSpec& g,
                                       double r_max, const QuadSpec& quad = {});

namespace detail {
struct SmearedValue {
  double lhs = 0.0;
  double rhs = 0.0;
};
SmearedValue smeared_once(Family family, const Potential& pot, const PhysicalScale& scale,
                          const GaussianSpec& g, double r_max, std::size_t n_energy,
                          std::size_t n_radius);
}  // namespace detail

}  // namespace radscat

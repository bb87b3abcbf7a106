#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "radscat/complex_math.hpp"
#include "radscat/potential.hpp"
#include "radscat/spectral.hpp"

namespace radscat {

//! Rectangle of sample points in the complex energy plane.
struct EnergyGrid {
  double re_min = 0.1;
  double re_max = 20.0;
  double im_min = -5.0;
  double im_max = 5.0;
  int n_re = 80;
  int n_im = 80;
  /// Points with |Im E| below this are skipped (for functions with a cut on the real axis).
  double real_axis_band = 0.0;

  std::vector<Complex> points() const;
};

enum class Classification { normalization, physically_distinct };

std::string to_string(Classification c);

struct CriterionReport {
  std::string label;
  double max_deviation = 0.0;  ///< max |conj(f(conj E)) - f(E)|
  double max_modulus = 0.0;    ///< max |f| over the finite samples
  double threshold = 0.0;      ///< relative_threshold (1 + max_modulus), default 1e-10
  Classification classification = Classification::normalization;
  EnergyGrid grid;
  std::size_t samples = 0;
  std::size_t non_finite = 0;  ///< samples dropped because f was inf/nan
  Complex worst_point{};
};

using EnergyFunction = std::function<Complex(Complex)>;

//! Does f satisfy [f(E*)]* = f(E) on the grid? If so, f(E) chi(r;E) is merely a
//! renormalization of chi; otherwise it carries different physics.
/*! Throws std::invalid_argument when a grid point lies within 1e-6 of the
    negative real axis, where E and E* sit on opposite edges of the cut. */
CriterionReport check_symmetry(std::string label, const EnergyFunction& f, const EnergyGrid& grid,
                               double relative_threshold = 1e-10);

/// k(E) = sqrt_branch(kappa E).
Complex wavenumber_of_energy(const PhysicalScale& scale, Complex energy);

EnergyFunction standing_measure_function(const Potential& pot, const PhysicalScale& scale);
EnergyFunction lippmann_measure_function(const PhysicalScale& scale);
EnergyFunction jost_plus_function(const Potential& pot, const PhysicalScale& scale);
EnergyFunction jost_minus_function(const Potential& pot, const PhysicalScale& scale);

//! The factor multiplying chi: sqrt(rho), sqrt(rho+)/J+ or sqrt(rho-)/J-.
EnergyFunction eigensolution_factor(Family family, const Potential& pot, const PhysicalScale& scale);

CriterionReport classify_eigensolution(Family family, const Potential& pot,
                                       const PhysicalScale& scale, const EnergyGrid& grid = {},
                                       double relative_threshold = 1e-10);

}  // namespace radscat

#pragma once

// Test-only reference integrator. Shares nothing with the layer propagation in
// solution.cpp beyond the Potential type.

#include <span>
#include <vector>

#include "radscat/complex_math.hpp"
#include "radscat/potential.hpp"

namespace radscat::oracles {

struct RkOptions {
  double step = 1e-3;              ///< nominal step; shortened to land on breakpoints and samples
  double flag_tolerance = 1e-8;    ///< relative h vs h/2 difference that marks the step too large
};

struct RkResult {
  std::vector<Complex> values;       ///< chi at each sample radius, input order
  std::vector<Complex> derivatives;  ///< chi' at each sample radius
  double error_estimate = 0.0;       ///< max |chi_h - chi_{h/2}| * 16/15, relative to max |chi|
  bool step_too_large = false;
};

//! Classical RK4 for chi'' = (kappa V - k^2) chi from chi(0) = 0, chi'(0) = k.
RkResult rk_oracle(const Potential& pot, const PhysicalScale& scale, Complex k,
                   std::span<const double> r_samples, const RkOptions& options = {});

struct ExteriorFit {
  Complex j3;  ///< coefficient of exp(i k r)
  Complex j4;  ///< coefficient of exp(-i k r)
};

//! Solves j3 e^{ikr} + j4 e^{-ikr} = chi at two exterior radii.
ExteriorFit fit_exterior_amplitudes(Complex k, double r1, Complex chi1, double r2, Complex chi2);

}  // namespace radscat::oracles

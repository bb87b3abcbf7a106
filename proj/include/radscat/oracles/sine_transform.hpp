#pragma once

// Closed-form smeared orthonormality for the free particle.

#include "radscat/potential.hpp"
#include "radscat/verification.hpp"

namespace radscat::oracles {

//! integral_0^R sin(k1 r) sin(k2 r) dr.
double sine_overlap(double k1, double k2, double r_max);

//! The smeared double integral for V = 0 with the r-integral done exactly. The
//! energy quadrature matches smeared_delta_check (Simpson, n_energy nodes).
double free_smeared_lhs(const PhysicalScale& scale, const GaussianSpec& g, double r_max,
                        std::size_t n_energy);

}  // namespace radscat::oracles

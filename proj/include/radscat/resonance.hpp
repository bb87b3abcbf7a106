#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "radscat/complex_math.hpp"
#include "radscat/potential.hpp"
#include "radscat/solution.hpp"

namespace radscat {

//! Rectangle [re_min, re_max] x [im_min, im_max] in the complex k plane.
struct KRegion {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;

  bool contains(Complex k, double slack = 0.0) const {
    return k.real() >= re_min - slack && k.real() <= re_max + slack && k.imag() >= im_min - slack &&
           k.imag() <= im_max + slack;
  }
};

enum class GamowKind { decaying, growing };

std::string to_string(GamowKind kind);

//! A purely outgoing solution at a pole of S.
/*! Decaying states sit in the fourth k quadrant at z = E - i Gamma/2; their growing
    partners at -conj(k), z* = E + i Gamma/2. Both momenta are zeros of J+. */
struct GamowState {
  GamowKind kind = GamowKind::decaying;
  Complex k{};
  Complex z{};            ///< k^2 / kappa
  double energy = 0.0;  ///< Re z
  double width = 0.0;   ///< Gamma > 0
  Complex norm_sq{};      ///< N^2 = i res S (decaying) or M^2 = conj(N^2) (growing)
  Complex norm{};         ///< N = sqrt_branch(N^2); M = conj(N)
  /// Contour and derivative residues agreed to 1e-6. When false, norm_sq comes
  /// from the derivative formula alone.
  bool residue_verified = false;
  Complex j3{};           ///< J3(k), the outgoing exterior amplitude of chi
  LayerSolution solution;
};

struct ResonanceOptions {
  double cell_size = 0.05;       ///< edge length of the scan cells in k
  std::size_t max_states = 64;
  double root_tolerance = 1e-12; ///< Newton stops once |dk| < tol |k|
};

struct ResonanceSearch {
  std::vector<GamowState> states;   ///< decaying states sorted by Re k
  std::vector<Complex> axis_zeros;  ///< zeros on the imaginary axis (antibound/bound), kind-less
  std::vector<Complex> other_zeros; ///< zeros outside the fourth quadrant
  int winding = 0;                  ///< argument-principle count around `contour`
  int refined = 0;                  ///< distinct zeros refined by Newton
  bool truncated = false;           ///< more than max_states decaying states
  KRegion contour;                  ///< rectangle actually integrated around
};

//! Every zero of J+ inside the region, certified against the winding number.
/*!
  An edge lying on the real axis is lifted to Im k = +1e-3 * height (J+ has no zeros
  off the imaginary axis in the upper half plane), and an edge on the imaginary axis
  is moved to Re k = 1e-4 * width. The region must not contain k = 0.

  Throws MissedRootsError when the refined zeros do not match the winding number,
  std::invalid_argument for a bad region.
*/
ResonanceSearch find_resonances(const Potential& pot, const PhysicalScale& scale,
                                const KRegion& region, const ResonanceOptions& options = {});

struct ResidueEstimate {
  Complex norm_sq{};     ///< i * contour residue
  Complex contour;     ///< res S from the circle integral
  Complex derivative;  ///< J-(k) / J+'(k)
  double radius = 0.0;
  double relative_gap = 0.0;
};

//! N^2 = i res[S]_{k = k_pole} with a derivative-formula cross-check.
/*! The circle radius is max(1e-4 |k|, min(d/4, 1e-2 |k|)) and never more than d/2,
    d being the distance to the nearest other pole. Throws ResidueError if the two
    estimates differ by more than 1e-6 relative. */
ResidueEstimate residue_norm(const Potential& pot, const PhysicalScale& scale, Complex k_pole,
                             double nearest_pole_distance = std::numeric_limits<double>::infinity());

//! State at a refined decaying pole; the residue is computed here.
GamowState make_gamow_state(const Potential& pot, const PhysicalScale& scale, Complex k_pole,
                            double nearest_pole_distance = std::numeric_limits<double>::infinity());

//! Partner at -conj(k) with conjugated energy and norm. Applying it twice is the identity.
GamowState growing_partner(const GamowState& state);

//! N chi(r)/J3 inside the outer radius, N exp(i k r) beyond it.
Complex gamow_eigenfunction(const GamowState& state, double r);
Complex gamow_eigenfunction_derivative(const GamowState& state, double r);

using ComplexFunction = std::function<Complex(Complex)>;

//! (1 / 2 pi i) * contour integral of f around a circle, trapezoid rule with `points` nodes.
Complex contour_residue(const ComplexFunction& f, Complex center, double radius, int points = 128);

//! f'(z) from central differences with step h, h/2, h/4 and Richardson extrapolation.
Complex richardson_derivative(const ComplexFunction& f, Complex z, double h);

//! Total change of arg f around the rectangle (counter-clockwise) divided by 2 pi.
double winding_number(const ComplexFunction& f, const KRegion& rect);

}  // namespace radscat

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "radscat/complex_math.hpp"
#include "radscat/potential.hpp"
#include "radscat/solution.hpp"

namespace radscat {

//! J+ = -2i J4 and J- = 2i J3.
struct JostPair {
  Complex k;
  Complex plus;
  Complex minus;
};

struct SMatrixValue {
  Complex k;
  Complex s;
};

JostPair jost(const LayerSolution& sol);
JostPair jost(const Potential& pot, const PhysicalScale& scale, Complex k);

//! S = J- / J+. Throws PoleError when |J+| <= 1e-14 |J-|.
SMatrixValue s_matrix(const Potential& pot, const PhysicalScale& scale, Complex k);

/// The three delta-normalized continuum families.
enum class Family { standing_wave, in, out };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);  ///< "standing_wave" | "in" | "out"

//! (1/4pi) (kappa/k) / (J4(k) conj(J4(conj k))): the standing-wave measure,
//! continued off the real axis so that it equals |J4|^2 in the denominator for real k.
Complex standing_measure(const Potential& pot, const PhysicalScale& scale, Complex k);

/// kappa / (pi k), shared by the "in" and "out" families.
Complex lippmann_measure(const PhysicalScale& scale, Complex k);

/// Measure of the family at real k > 0.
double spectral_measure(Family family, const Potential& pot, const PhysicalScale& scale, double k);

//! <r|E>, <r|E+> or <r|E-> at one energy: a fixed multiple of chi(r; k).
class ContinuumState {
 public:
  ContinuumState(Family family, double energy, Complex factor, LayerSolution sol);

  Family family() const { return family_; }
  double energy() const { return energy_; }
  double k() const { return sol_.k().real(); }
  /// sqrt(rho) for standing waves, sqrt(rho+-) / J+- otherwise.
  Complex factor() const { return factor_; }
  const LayerSolution& solution() const { return sol_; }

  Complex operator()(double r) const { return factor_ * sol_.value(r); }
  Complex derivative(double r) const { return factor_ * sol_.derivative(r); }

 private:
  Family family_;
  double energy_;
  Complex factor_;
  LayerSolution sol_;
};

//! Builds the family member at energy E > 0 with k = sqrt_branch(kappa E).
ContinuumState continuum_state(Family family, const Potential& pot, const PhysicalScale& scale,
                               double energy);

Complex eigenfunction(Family family, const Potential& pot, const PhysicalScale& scale,
                      double energy, double r);

//! psi sampled on the uniform grid r_j = j * r_max / (n - 1), n odd.
struct RadialSamples {
  double r_max = 0.0;
  std::vector<Complex> values;

  double spacing() const { return r_max / static_cast<double>(values.size() - 1); }
  double radius(std::size_t j) const { return spacing() * static_cast<double>(j); }
};

struct TransformResult {
  std::vector<Complex> coefficients;
  /// Fewer than 12 samples per wavelength at the top of the energy grid.
  bool undersampled = false;
  double phase_step = 0.0;  ///< k_max * dr
};

//! psi_hat(E) = integral_0^r_max dr conj(<r|E>) psi(r), composite Simpson in r.
/*! The energy grid must be non-empty, strictly increasing and positive. Samples that
    are exactly zero are skipped, which makes compactly supported inputs cheap. */
TransformResult energy_transform(Family family, const Potential& pot, const PhysicalScale& scale,
                                 const RadialSamples& psi, std::span<const double> energies);

namespace detail {
void validate_transform_inputs(const RadialSamples& psi, std::span<const double> energies);
}

}  // namespace radscat

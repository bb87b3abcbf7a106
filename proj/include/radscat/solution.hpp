#pragma once

#include <cstddef>
#include <vector>

#include "radscat/complex_math.hpp"
#include "radscat/potential.hpp"

namespace radscat {

//! Coefficients of chi = outgoing * exp(i q r) + incoming * exp(-i q r) on one layer,
//! with r measured from the origin.
struct LayerAmplitudes {
  Complex outgoing;
  Complex incoming;
};

//! The regular solution chi(r; k): chi(0) = 0, chi'(0) = k, chi and chi' continuous.
/*!
  Each layer keeps the value and slope of chi at its left edge together with a
  log-scale exponent, so chi = exp(log_scale) * (value cos(q s) + slope sin(q s)/q)
  with s the distance from the edge. Layers whose growth factor |Im q| * width
  exceeds 30 renormalize before handing over to the next layer.

  With a zero-height innermost layer, chi = sin(kr) there and the exterior
  amplitudes are the Jost coefficients J3 (outgoing) and J4 (incoming). For a
  shell, layer 1 carries (J1, J2).
*/
class LayerSolution {
 public:
  struct EdgeState {
    Complex q;
    Complex value;
    Complex slope;
    double log_scale = 0.0;
  };

  LayerSolution(Potential pot, PhysicalScale scale, Complex k, std::vector<EdgeState> layers);

  Complex k() const { return k_; }
  const Potential& potential() const { return pot_; }
  const PhysicalScale& scale() const { return scale_; }
  std::size_t layer_count() const { return layers_.size(); }
  const EdgeState& edge(std::size_t layer) const { return layers_.at(layer); }

  Complex wavenumber(std::size_t layer) const { return layers_.at(layer).q; }
  /// True when q = 0 on this layer; chi is then linear in r there.
  bool is_linear(std::size_t layer) const { return layers_.at(layer).q == Complex(0.0); }
  /// Throws std::domain_error on a linear layer.
  LayerAmplitudes amplitudes(std::size_t layer) const;

  Complex j3() const;  ///< outgoing exterior amplitude
  Complex j4() const;  ///< incoming exterior amplitude

  Complex value(double r) const;
  Complex derivative(double r) const;
  Complex second_derivative(double r) const;

  //! max(|jump chi|, |jump chi'|) / max(|chi|, |chi'|) at breakpoint i, using the
  //! closed form of the left layer evaluated at its right edge.
  double continuity_residual(std::size_t breakpoint) const;

 private:
  Potential pot_;
  PhysicalScale scale_;
  Complex k_;
  std::vector<EdgeState> layers_;
};

//! Propagates (chi, chi') from (0, k) outward through every interface.
/*! Throws std::invalid_argument for k = 0 (chi would vanish identically) or non-finite k. */
LayerSolution solve_regular(const Potential& pot, const PhysicalScale& scale, Complex k);

Complex evaluate_chi(const LayerSolution& sol, double r);
Complex evaluate_chi_derivative(const LayerSolution& sol, double r);

namespace detail {

struct ValueSlope {
  Complex value;
  Complex slope;
};

// Advances (chi, chi') a distance s inside a layer of local wavenumber q.
ValueSlope advance(Complex q, ValueSlope at_edge, double s);

}  // namespace detail

}  // namespace radscat

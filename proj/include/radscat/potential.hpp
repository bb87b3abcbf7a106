#pragma once

#include <cstddef>
#include <vector>

#include "radscat/complex_math.hpp"

namespace radscat {

//! kappa = 2m/hbar^2, so that k^2 = kappa * E.
class PhysicalScale {
 public:
  explicit PhysicalScale(double kappa = 1.0);
  double kappa() const { return kappa_; }

 private:
  double kappa_;
};

//! Piecewise-constant radial potential.
/*! Layer 0 spans [0, breakpoints[0]), layer l spans
    [breakpoints[l-1], breakpoints[l]) with height heights[l], and the
    exterior layer (index breakpoints.size()) has height 0 out to infinity.
    Layer indices therefore run over 0..layer_count()-1, the last one being
    the force-free exterior. */
class Potential {
 public:
  Potential(std::vector<double> breakpoints, std::vector<double> heights);

  //! V = 0 everywhere (a single zero-height layer ending at r = 1).
  static Potential free();

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& heights() const { return heights_; }

  std::size_t layer_count() const { return heights_.size() + 1; }
  std::size_t exterior_layer() const { return heights_.size(); }
  double outer_radius() const { return breakpoints_.back(); }

  double height(std::size_t layer) const;
  double left_edge(std::size_t layer) const;
  double width(std::size_t layer) const;  ///< infinite for the exterior
  std::size_t layer_at(double r) const;   ///< a breakpoint belongs to the layer on its right
  double operator()(double r) const { return height(layer_at(r)); }

  bool is_free() const;
  bool is_nonnegative() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> heights_;
};

/// 0 on (0, a), v0 on (a, b), 0 beyond b.
Potential make_shell(double v0, double a, double b);

//! sqrt(k^2 - kappa*V_layer) on the sqrt_branch sheet; k itself when V_layer = 0.
Complex local_wavenumber(const Potential& pot, const PhysicalScale& scale, Complex k,
                         std::size_t layer);

}  // namespace radscat

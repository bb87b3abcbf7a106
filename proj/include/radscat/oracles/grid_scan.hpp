#pragma once

// Brute-force zero finder used to check the resonance search.

#include <functional>
#include <vector>

#include "radscat/complex_math.hpp"
#include "radscat/resonance.hpp"

namespace radscat::oracles {

struct GridScanResult {
  std::vector<Complex> zeros;  ///< sorted by real part
  int cells_flagged = 0;       ///< cells whose boundary winding was nonzero
};

//! Samples f on an (n+1)^2 lattice over the rectangle, flags every cell whose boundary
//! winds around 0 (edges split where the phase turns by more than pi/2), then
//! quarters flagged cells (with a small overlap) until they are smaller than
//! `tolerance` and reports the cell centre.
GridScanResult grid_scan_zeros(const std::function<Complex(Complex)>& f, const KRegion& rect,
                               int n = 2000, double tolerance = 1e-11);

}  // namespace radscat::oracles

#include "radscat/complex_math.hpp"

#include <cmath>

namespace radscat {

Complex sqrt_branch(Complex energy) {
  if (energy.imag() == 0.0) {
    if (energy.real() >= 0.0) return {std::sqrt(energy.real()), 0.0};
    return {0.0, std::sqrt(-energy.real())};
  }
  return std::sqrt(energy);
}

}  // namespace radscat

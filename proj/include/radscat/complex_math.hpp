#pragma once

#include <complex>
#include <numbers>

namespace radscat {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

//! Square root with arg(E) in (-pi, pi] mapped onto arg in (-pi/2, pi/2].
/*! Differs from std::sqrt only on the negative real axis carrying a negative
    zero imaginary part: there std::sqrt returns the lower edge (-i|E|^1/2),
    while this branch always takes the upper edge. */
Complex sqrt_branch(Complex energy);

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace radscat

#include "radscat/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace radscat {

PhysicalScale::PhysicalScale(double kappa) : kappa_(kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("kappa must be positive and finite");
}

Potential::Potential(std::vector<double> breakpoints, std::vector<double> heights)
    : breakpoints_(std::move(breakpoints)), heights_(std::move(heights)) {
  if (breakpoints_.empty())
    throw std::invalid_argument("potential needs at least one breakpoint");
  if (breakpoints_.size() != heights_.size())
    throw std::invalid_argument("breakpoints and heights must have the same length (got " +
                                std::to_string(breakpoints_.size()) + " and " +
                                std::to_string(heights_.size()) + ")");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i]) || breakpoints_[i] <= 0.0)
      throw std::invalid_argument("breakpoints must be positive and finite");
    if (i > 0 && breakpoints_[i] <= breakpoints_[i - 1])
      throw std::invalid_argument("breakpoints not increasing");
  }
  for (double h : heights_)
    if (!std::isfinite(h)) throw std::invalid_argument("layer heights must be finite");
}

Potential Potential::free() { return Potential({1.0}, {0.0}); }

double Potential::height(std::size_t layer) const {
  if (layer >= layer_count()) throw std::out_of_range("layer index out of range");
  return layer < heights_.size() ? heights_[layer] : 0.0;
}

double Potential::left_edge(std::size_t layer) const {
  if (layer >= layer_count()) throw std::out_of_range("layer index out of range");
  return layer == 0 ? 0.0 : breakpoints_[layer - 1];
}

double Potential::width(std::size_t layer) const {
  if (layer >= layer_count()) throw std::out_of_range("layer index out of range");
  if (layer == exterior_layer()) return std::numeric_limits<double>::infinity();
  return breakpoints_[layer] - left_edge(layer);
}

std::size_t Potential::layer_at(double r) const {
  if (!(r >= 0.0)) throw std::invalid_argument("radius must be non-negative");
  return static_cast<std::size_t>(
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), r) - breakpoints_.begin());
}

bool Potential::is_free() const {
  return std::all_of(heights_.begin(), heights_.end(), [](double h) { return h == 0.0; });
}

bool Potential::is_nonnegative() const {
  return std::all_of(heights_.begin(), heights_.end(), [](double h) { return h >= 0.0; });
}

Potential make_shell(double v0, double a, double b) {
  if (!std::isfinite(v0)) throw std::invalid_argument("shell height must be finite");
  if (!(a > 0.0)) throw std::invalid_argument("inner radius must be positive");
  if (!(b > a)) throw std::invalid_argument("breakpoints not increasing");
  return Potential({a, b}, {0.0, v0});
}

Complex local_wavenumber(const Potential& pot, const PhysicalScale& scale, Complex k,
                         std::size_t layer) {
  const double v = pot.height(layer);
  if (v == 0.0) return k;
  return sqrt_branch(k * k - scale.kappa() * v);
}

}  // namespace radscat

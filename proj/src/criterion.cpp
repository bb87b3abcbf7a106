#include "radscat/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radscat/kernels.hpp"
#include "radscat/quadrature.hpp"

namespace radscat {

std::vector<Complex> EnergyGrid::points() const {
  if (n_re < 1 || n_im < 1) throw std::invalid_argument("energy grid needs at least one point per axis");
  if (!(re_max >= re_min) || !(im_max >= im_min)) throw std::invalid_argument("energy grid bounds reversed");
  const auto re = linspace(re_min, re_max, static_cast<std::size_t>(n_re));
  const auto im = linspace(im_min, im_max, static_cast<std::size_t>(n_im));
  std::vector<Complex> pts;
  pts.reserve(re.size() * im.size());
  for (double y : im) {
    if (std::abs(y) < real_axis_band) continue;
    for (double x : re) pts.emplace_back(x, y);
  }
  return pts;
}

std::string to_string(Classification c) {
  return c == Classification::normalization ? "normalization" : "physically_distinct";
}

CriterionReport check_symmetry(std::string label, const EnergyFunction& f, const EnergyGrid& grid,
                               double relative_threshold) {
  constexpr double kCutMargin = 1e-6;
  const auto pts = grid.points();
  std::vector<Complex> mirrored(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] != Complex(0.0) && std::abs(std::arg(pts[i])) > kPi - kCutMargin)
      throw std::invalid_argument("criterion grid touches the branch cut on the negative real axis");
    mirrored[i] = std::conj(pts[i]);
  }
  const auto direct = kernels::map_grid(f, pts);
  const auto reflected = kernels::map_grid(f, mirrored);

  CriterionReport rep;
  rep.label = std::move(label);
  rep.grid = grid;
  rep.samples = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!is_finite(direct[i]) || !is_finite(reflected[i])) {
      ++rep.non_finite;
      continue;
    }
    rep.max_modulus = std::max({rep.max_modulus, std::abs(direct[i]), std::abs(reflected[i])});
    const double dev = std::abs(std::conj(reflected[i]) - direct[i]);
    if (dev > rep.max_deviation) {
      rep.max_deviation = dev;
      rep.worst_point = pts[i];
    }
  }
  rep.threshold = relative_threshold * (1.0 + rep.max_modulus);
  rep.classification = rep.max_deviation <= rep.threshold ? Classification::normalization
                                                          : Classification::physically_distinct;
  return rep;
}

Complex wavenumber_of_energy(const PhysicalScale& scale, Complex energy) {
  return sqrt_branch(scale.kappa() * energy);
}

EnergyFunction standing_measure_function(const Potential& pot, const PhysicalScale& scale) {
  return [pot, scale](Complex e) { return standing_measure(pot, scale, wavenumber_of_energy(scale, e)); };
}

EnergyFunction lippmann_measure_function(const PhysicalScale& scale) {
  return [scale](Complex e) { return lippmann_measure(scale, wavenumber_of_energy(scale, e)); };
}

EnergyFunction jost_plus_function(const Potential& pot, const PhysicalScale& scale) {
  return [pot, scale](Complex e) { return jost(pot, scale, wavenumber_of_energy(scale, e)).plus; };
}

EnergyFunction jost_minus_function(const Potential& pot, const PhysicalScale& scale) {
  return [pot, scale](Complex e) { return jost(pot, scale, wavenumber_of_energy(scale, e)).minus; };
}

EnergyFunction eigensolution_factor(Family family, const Potential& pot, const PhysicalScale& scale) {
  switch (family) {
    case Family::standing_wave:
      return [pot, scale](Complex e) {
        return sqrt_branch(standing_measure(pot, scale, wavenumber_of_energy(scale, e)));
      };
    case Family::in:
      return [pot, scale](Complex e) {
        const Complex k = wavenumber_of_energy(scale, e);
        return sqrt_branch(lippmann_measure(scale, k)) / jost(pot, scale, k).plus;
      };
    case Family::out:
      return [pot, scale](Complex e) {
        const Complex k = wavenumber_of_energy(scale, e);
        return sqrt_branch(lippmann_measure(scale, k)) / jost(pot, scale, k).minus;
      };
  }
  throw std::invalid_argument("unknown family");
}

CriterionReport classify_eigensolution(Family family, const Potential& pot,
                                       const PhysicalScale& scale, const EnergyGrid& grid,
                                       double relative_threshold) {
  return check_symmetry(std::string(to_string(family)), eigensolution_factor(family, pot, scale), grid,
                        relative_threshold);
}

}  // namespace radscat

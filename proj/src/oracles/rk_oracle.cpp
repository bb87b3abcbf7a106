#include "radscat/oracles/rk_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace radscat::oracles {

namespace {

struct State {
  Complex u;
  Complex du;
};

// One pass with nominal step h. Stops at every breakpoint and every sample so
// that no step straddles a jump in V.
std::vector<State> integrate(const Potential& pot, double kappa, Complex k,
                             const std::vector<double>& sorted, double h) {
  std::vector<double> stops(sorted.begin(), sorted.end());
  for (std::size_t l = 1; l < pot.layer_count(); ++l) stops.push_back(pot.left_edge(l));
  std::sort(stops.begin(), stops.end());

  const Complex k2 = k * k;
  State s{0.0, k};
  double r = 0.0;
  std::vector<State> out;
  out.reserve(sorted.size());
  std::size_t next_sample = 0;
  while (next_sample < sorted.size() && sorted[next_sample] == 0.0) {
    out.push_back(s);
    ++next_sample;
  }
  for (double stop : stops) {
    if (stop > r) {
      const double mid = 0.5 * (r + stop);
      const Complex c = kappa * pot(mid) - k2;  // chi'' = c chi on this stretch
      const auto n = static_cast<long>(std::ceil((stop - r) / h));
      const double step = (stop - r) / static_cast<double>(n);
      for (long i = 0; i < n; ++i) {
        const Complex k1u = s.du, k1p = c * s.u;
        const Complex k2u = s.du + 0.5 * step * k1p, k2p = c * (s.u + 0.5 * step * k1u);
        const Complex k3u = s.du + 0.5 * step * k2p, k3p = c * (s.u + 0.5 * step * k2u);
        const Complex k4u = s.du + step * k3p, k4p = c * (s.u + step * k3u);
        s.u += step / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        s.du += step / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
      }
      r = stop;
    }
    while (next_sample < sorted.size() && sorted[next_sample] == r) {
      out.push_back(s);
      ++next_sample;
    }
  }
  return out;
}

}  // namespace

RkResult rk_oracle(const Potential& pot, const PhysicalScale& scale, Complex k,
                   std::span<const double> r_samples, const RkOptions& options) {
  if (!(options.step > 0.0)) throw std::invalid_argument("step must be positive");
  for (double r : r_samples)
    if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("sample radii must be finite and >= 0");

  std::vector<std::size_t> order(r_samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return r_samples[a] < r_samples[b]; });
  std::vector<double> sorted;
  for (auto i : order) sorted.push_back(r_samples[i]);

  const auto coarse = integrate(pot, scale.kappa(), k, sorted, options.step);
  const auto fine = integrate(pot, scale.kappa(), k, sorted, 0.5 * options.step);

  RkResult res;
  res.values.resize(r_samples.size());
  res.derivatives.resize(r_samples.size());
  double diff = 0.0, scale_max = 0.0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    res.values[order[j]] = coarse[j].u;
    res.derivatives[order[j]] = coarse[j].du;
    diff = std::max(diff, std::abs(coarse[j].u - fine[j].u));
    scale_max = std::max(scale_max, std::abs(fine[j].u));
  }
  res.error_estimate = scale_max > 0.0 ? diff * 16.0 / 15.0 / scale_max : diff;
  res.step_too_large = res.error_estimate > options.flag_tolerance;
  return res;
}

ExteriorFit fit_exterior_amplitudes(Complex k, double r1, Complex chi1, double r2, Complex chi2) {
  const Complex i{0.0, 1.0};
  const Complex a11 = std::exp(i * k * r1), a12 = std::exp(-i * k * r1);
  const Complex a21 = std::exp(i * k * r2), a22 = std::exp(-i * k * r2);
  const Complex det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-12 * std::abs(a11 * a22)) throw std::invalid_argument("fit radii are degenerate");
  return {(chi1 * a22 - a12 * chi2) / det, (a11 * chi2 - a21 * chi1) / det};
}

}  // namespace radscat::oracles

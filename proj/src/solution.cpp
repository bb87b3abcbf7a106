#include "radscat/solution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace radscat {

namespace detail {

ValueSlope advance(Complex q, ValueSlope at_edge, double s) {
  const auto [v, p] = at_edge;
  if (q == Complex(0.0)) return {v + p * s, p};
  const Complex qs = q * s;
  if (std::abs(qs) < 1.0) {
    const Complex c = std::cos(qs);
    const Complex sn = std::sin(qs);
    return {v * c + p * (sn / q), -v * q * sn + p * c};
  }
  // Exponential basis: the growing and decaying pieces are formed before the
  // amplification, so cancellation happens at O(1) magnitude.
  const Complex iq = kI * q;
  const Complex a = 0.5 * (v + p / iq);
  const Complex b = 0.5 * (v - p / iq);
  const Complex grow = a * std::exp(iq * s);
  const Complex decay = b * std::exp(-iq * s);
  return {grow + decay, iq * (grow - decay)};
}

}  // namespace detail

namespace {

constexpr double kRescaleThreshold = 30.0;

}  // namespace

LayerSolution::LayerSolution(Potential pot, PhysicalScale scale, Complex k,
                             std::vector<EdgeState> layers)
    : pot_(std::move(pot)), scale_(scale), k_(k), layers_(std::move(layers)) {}

LayerAmplitudes LayerSolution::amplitudes(std::size_t layer) const {
  const EdgeState& st = layers_.at(layer);
  if (st.q == Complex(0.0))
    throw std::domain_error("layer has q = 0; chi is linear there and has no exponential amplitudes");
  if (layer == 0) {
    // chi = (k/q) sin(q r) = (k/q) [exp(iqr) - exp(-iqr)] / (2i)
    const Complex ratio = st.q == k_ ? Complex(1.0) : k_ / st.q;
    return {ratio * Complex(0.0, -0.5), ratio * Complex(0.0, 0.5)};
  }
  const double left = pot_.left_edge(layer);
  const Complex iq = kI * st.q;
  const double mag = std::exp(st.log_scale);
  const Complex a = 0.5 * (st.value + st.slope / iq);
  const Complex b = 0.5 * (st.value - st.slope / iq);
  return {mag * a * std::exp(-iq * left), mag * b * std::exp(iq * left)};
}

Complex LayerSolution::j3() const { return amplitudes(layers_.size() - 1).outgoing; }
Complex LayerSolution::j4() const { return amplitudes(layers_.size() - 1).incoming; }

Complex LayerSolution::value(double r) const {
  const std::size_t l = pot_.layer_at(r);
  const EdgeState& st = layers_[l];
  const auto vs = detail::advance(st.q, {st.value, st.slope}, r - pot_.left_edge(l));
  return std::exp(st.log_scale) * vs.value;
}

Complex LayerSolution::derivative(double r) const {
  const std::size_t l = pot_.layer_at(r);
  const EdgeState& st = layers_[l];
  const auto vs = detail::advance(st.q, {st.value, st.slope}, r - pot_.left_edge(l));
  return std::exp(st.log_scale) * vs.slope;
}

Complex LayerSolution::second_derivative(double r) const {
  const std::size_t l = pot_.layer_at(r);
  const Complex q = layers_[l].q;
  return -q * q * value(r);
}

double LayerSolution::continuity_residual(std::size_t breakpoint) const {
  if (breakpoint >= pot_.breakpoints().size()) throw std::out_of_range("breakpoint index");
  const std::size_t left = breakpoint;
  const EdgeState& l = layers_[left];
  const EdgeState& r = layers_[left + 1];
  const auto end = detail::advance(l.q, {l.value, l.slope}, pot_.width(left));
  const double lscale = std::exp(l.log_scale);
  const double rscale = std::exp(r.log_scale);
  const Complex chi_l = lscale * end.value, dchi_l = lscale * end.slope;
  const Complex chi_r = rscale * r.value, dchi_r = rscale * r.slope;
  const double norm = std::max({std::abs(chi_l), std::abs(dchi_l), std::abs(chi_r), std::abs(dchi_r)});
  if (norm == 0.0) return 0.0;
  return std::max(std::abs(chi_l - chi_r), std::abs(dchi_l - dchi_r)) / norm;
}

LayerSolution solve_regular(const Potential& pot, const PhysicalScale& scale, Complex k) {
  if (!is_finite(k)) throw std::invalid_argument("wavenumber must be finite");
  if (k == Complex(0.0))
    throw std::invalid_argument("k = 0 is degenerate: the regular solution vanishes identically");

  std::vector<LayerSolution::EdgeState> layers(pot.layer_count());
  detail::ValueSlope state{Complex(0.0), k};
  double log_scale = 0.0;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const Complex q = local_wavenumber(pot, scale, k, l);
    layers[l] = {q, state.value, state.slope, log_scale};
    if (l == pot.exterior_layer()) break;
    const double w = pot.width(l);
    state = detail::advance(q, state, w);
    if (std::abs(q.imag()) * w > kRescaleThreshold) {
      const double m = std::max(std::abs(state.value), std::abs(state.slope));
      if (m > 0.0 && std::isfinite(m)) {
        state.value /= m;
        state.slope /= m;
        log_scale += std::log(m);
      }
    }
  }
  return LayerSolution(pot, scale, k, std::move(layers));
}

Complex evaluate_chi(const LayerSolution& sol, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("radius must be non-negative");
  return sol.value(r);
}

Complex evaluate_chi_derivative(const LayerSolution& sol, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("radius must be non-negative");
  return sol.derivative(r);
}

}  // namespace radscat

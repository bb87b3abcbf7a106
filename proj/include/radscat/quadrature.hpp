#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace radscat {

// Pairwise (cascade) summation; the summation tree depends only on the
// length, so results are reproducible run to run.
template <typename T>
T pairwise_sum(std::span<const T> values) {
  constexpr std::size_t kBlock = 8;
  if (values.size() <= kBlock) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& values) {
  return pairwise_sum(std::span<const T>(values));
}

/// Composite Simpson weights for `points` equally spaced samples with spacing h.
inline std::vector<double> simpson_weights(std::size_t points, double h) {
  if (points < 3 || points % 2 == 0)
    throw std::invalid_argument("Simpson's rule needs an odd number (>= 3) of samples");
  std::vector<double> w(points);
  for (std::size_t i = 0; i < points; ++i) {
    if (i == 0 || i + 1 == points)
      w[i] = h / 3.0;
    else
      w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
  }
  return w;
}

/// Simpson integral of equally spaced samples, summed pairwise.
template <typename T>
T simpson(std::span<const T> samples, double h) {
  const auto w = simpson_weights(samples.size(), h);
  std::vector<T> terms(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) terms[i] = w[i] * samples[i];
  return pairwise_sum(std::span<const T>(terms));
}

inline std::vector<double> linspace(double lo, double hi, std::size_t points) {
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

}  // namespace radscat

// OpenMP kernels against their serial twins on the V0 = 8 shell.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "radscat/kernels.hpp"
#include "radscat/quadrature.hpp"

using namespace radscat;

namespace {

const PhysicalScale kOne(1.0);

const Potential& shell() {
  static const Potential pot = make_shell(8.0, 1.0, 2.0);
  return pot;
}

std::vector<Complex> k_lattice(std::size_t n) {
  std::vector<Complex> ks;
  ks.reserve(n * n);
  for (double im : linspace(-2.0, 0.5, n))
    for (double re : linspace(0.05, 6.0, n)) ks.emplace_back(re, im);
  return ks;
}

RadialSamples bump() {
  RadialSamples psi{20.0, std::vector<Complex>(4001)};
  for (std::size_t j = 0; j < psi.values.size(); ++j) {
    const double x = psi.radius(j) - 10.0;
    if (std::abs(x) <= 8.0) psi.values[j] = std::exp(-0.5 * x * x) * std::cos(4.0 * psi.radius(j));
  }
  return psi;
}

template <bool Parallel>
void BM_jost_grid(benchmark::State& state) {
  const auto ks = k_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto out = Parallel ? kernels::jost_grid(shell(), kOne, ks) : kernels::jost_grid_serial(shell(), kOne, ks);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ks.size()));
}

template <bool Parallel>
void BM_transform_grid(benchmark::State& state) {
  const RadialSamples psi = bump();
  const auto es = linspace(0.005, 80.005, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto out = Parallel ? kernels::transform_grid(Family::standing_wave, shell(), kOne, psi, es)
                        : kernels::transform_grid_serial(Family::standing_wave, shell(), kOne, psi, es);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(es.size()));
}

template <bool Parallel>
void BM_superpose(benchmark::State& state) {
  const auto es = linspace(10.0, 20.0, 301);
  std::vector<ContinuumState> states;
  std::vector<double> weights;
  for (double e : es) {
    states.push_back(continuum_state(Family::standing_wave, shell(), kOne, e));
    weights.push_back(std::exp(-0.5 * (e - 15.0) * (e - 15.0)));
  }
  const auto radii = linspace(0.0, 40.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto out = Parallel ? kernels::superpose(states, weights, radii) : kernels::superpose_serial(states, weights, radii);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(radii.size()));
}

}  // namespace

BENCHMARK(BM_jost_grid<true>)->Name("jost_grid/parallel")->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_jost_grid<false>)->Name("jost_grid/serial")->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_transform_grid<true>)->Name("transform_grid/parallel")->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_transform_grid<false>)->Name("transform_grid/serial")->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_superpose<true>)->Name("superpose/parallel")->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_superpose<false>)->Name("superpose/serial")->Arg(2001)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

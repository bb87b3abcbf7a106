#include <doctest.h>

#include <cstring>
#include <vector>

#include <omp.h>

#include "radscat/criterion.hpp"
#include "radscat/kernels.hpp"
#include "radscat/quadrature.hpp"

using namespace radscat;

namespace {

const PhysicalScale kOne(1.0);
const Potential kShell = make_shell(8.0, 1.0, 2.0);

template <typename T>
bool bitwise_equal(const std::vector<T>& a, const std::vector<T>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}

bool same(const std::vector<JostPair>& a, const std::vector<JostPair>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::memcmp(&a[i].plus, &b[i].plus, sizeof(Complex)) || std::memcmp(&a[i].minus, &b[i].minus, sizeof(Complex)))
      return false;
  return true;
}

struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

std::vector<Complex> k_points() {
  std::vector<Complex> ks;
  for (double re : linspace(-5.0, 5.0, 41))
    for (double im : linspace(-2.0, 1.0, 13))
      if (re != 0.0 || im != 0.0) ks.emplace_back(re, im);
  return ks;
}

}  // namespace

TEST_CASE("parallel kernels are bitwise identical to the serial references") {
  const Threads four(4);
  const auto ks = k_points();
  CHECK(same(kernels::jost_grid(kShell, kOne, ks), kernels::jost_grid_serial(kShell, kOne, ks)));
  CHECK(bitwise_equal(kernels::jost_plus_grid(kShell, kOne, ks), kernels::jost_plus_grid_serial(kShell, kOne, ks)));

  const auto f = standing_measure_function(kShell, kOne);
  const auto es = EnergyGrid{}.points();
  CHECK(bitwise_equal(kernels::map_grid(f, es), kernels::map_grid_serial(f, es)));

  RadialSamples psi{20.0, std::vector<Complex>(2001)};
  for (std::size_t j = 0; j < psi.values.size(); ++j) {
    const double r = psi.radius(j);
    psi.values[j] = std::exp(-0.5 * (r - 10.0) * (r - 10.0)) * std::polar(1.0, 3.0 * r);
  }
  const auto energies = linspace(0.1, 40.0, 400);
  for (Family fam : {Family::standing_wave, Family::in, Family::out})
    CHECK(bitwise_equal(kernels::transform_grid(fam, kShell, kOne, psi, energies),
                        kernels::transform_grid_serial(fam, kShell, kOne, psi, energies)));

  std::vector<ContinuumState> states;
  std::vector<double> weights;
  for (double e : linspace(5.0, 25.0, 101)) {
    states.push_back(continuum_state(Family::out, kShell, kOne, e));
    weights.push_back(std::exp(-0.1 * (e - 15.0) * (e - 15.0)));
  }
  const auto radii = linspace(0.0, 40.0, 3001);
  CHECK(bitwise_equal(kernels::superpose(states, weights, radii), kernels::superpose_serial(states, weights, radii)));
}

TEST_CASE("parallel_for rethrows the first exception") {
  const Threads four(4);
  CHECK_THROWS_AS(kernels::parallel_for(100, [](std::size_t i) {
                    if (i == 57) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
  std::vector<int> hit(1000, 0);
  kernels::parallel_for(hit.size(), [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) CHECK(h == 1);
}

TEST_CASE("grid errors propagate from the kernels") {
  const std::vector<Complex> bad{Complex(1.0), Complex(0.0)};
  CHECK_THROWS_AS(kernels::jost_grid(kShell, kOne, bad), std::invalid_argument);
}

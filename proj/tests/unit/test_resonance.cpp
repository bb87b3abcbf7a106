#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "radscat/errors.hpp"
#include "radscat/oracles/grid_scan.hpp"
#include "radscat/quadrature.hpp"
#include "radscat/resonance.hpp"
#include "radscat/spectral.hpp"

using namespace radscat;

namespace {

const PhysicalScale kOne(1.0);
const Potential kShell = make_shell(8.0, 1.0, 2.0);
const KRegion kRegion{0.0, 6.0, -2.0, 0.0};

const ResonanceSearch& shell_search() {
  static const ResonanceSearch res = find_resonances(kShell, kOne, kRegion);
  return res;
}

}  // namespace

TEST_CASE("free potential has no resonances") {
  const auto res = find_resonances(Potential::free(), kOne, {0.0, 10.0, -3.0, 0.0});
  CHECK(res.states.empty());
  CHECK(res.winding == 0);
  CHECK(res.refined == 0);
}

TEST_CASE("shell poles match the grid-scan oracle") {
  const auto& res = shell_search();
  REQUIRE(res.states.size() == 3);
  CHECK(res.winding == res.refined);
  CHECK(res.axis_zeros.empty());
  for (std::size_t i = 1; i < res.states.size(); ++i) CHECK(res.states[i - 1].k.real() < res.states[i].k.real());

  const auto scan = oracles::grid_scan_zeros([](Complex k) { return jost(kShell, kOne, k).plus; }, res.contour, 600);
  REQUIRE(scan.zeros.size() == res.states.size());
  for (std::size_t i = 0; i < scan.zeros.size(); ++i) CHECK(std::abs(scan.zeros[i] - res.states[i].k) <= 1e-8);

  for (const auto& st : res.states) {
    CHECK(st.kind == GamowKind::decaying);
    CHECK(st.k.real() > 0.0);
    CHECK(st.k.imag() < 0.0);
    CHECK(std::abs(st.z - st.k * st.k) <= 1e-15 * std::abs(st.z));
    CHECK(st.width == doctest::Approx(-2.0 * st.z.imag()));
    CHECK(st.width > 0.0);
    CHECK(std::abs(jost(kShell, kOne, st.k).plus) <= 1e-10);
    CHECK(st.residue_verified);
  }
}

TEST_CASE("conjugate-pair structure") {
  for (const auto& st : shell_search().states) {
    const Complex mirror = -std::conj(st.k);
    CHECK(std::abs(jost(kShell, kOne, mirror).plus) <= 1e-10);
    CHECK(std::abs(jost(kShell, kOne, std::conj(st.k)).minus) <= 1e-10);

    const GamowState g = growing_partner(st);
    CHECK(g.kind == GamowKind::growing);
    CHECK(g.k == mirror);
    CHECK(g.z == std::conj(st.z));
    CHECK(g.norm_sq == std::conj(st.norm_sq));
    const GamowState back = growing_partner(g);
    CHECK(back.kind == GamowKind::decaying);
    CHECK(back.k == st.k);
    CHECK(back.norm_sq == st.norm_sq);

    // independent: i res S at the mirror pole
    const Complex m2 = residue_norm(kShell, kOne, mirror).norm_sq;
    CHECK(std::abs(m2 - std::conj(st.norm_sq)) <= 1e-8 * std::abs(st.norm_sq));

    // the growing eigenfunction is the complex conjugate of the decaying one
    for (double r : {0.3, 1.4, 2.0, 3.7})
      CHECK(std::abs(gamow_eigenfunction(g, r) - std::conj(gamow_eigenfunction(st, r))) <=
            1e-12 * std::abs(gamow_eigenfunction(st, r)));
  }
}

TEST_CASE("residue estimates") {
  const auto& st = shell_search().states.front();
  const auto est = residue_norm(kShell, kOne, st.k, std::abs(shell_search().states[1].k - st.k));
  CHECK(est.relative_gap <= 1e-6);
  CHECK(std::abs(est.norm_sq - st.norm_sq) <= 1e-6 * std::abs(st.norm_sq));

  const Complex p{1.3, -0.4}, w{0.2, 0.9};
  const Complex res = contour_residue([&](Complex k) { return (k - w) / (k - p); }, p, 0.1);
  CHECK(std::abs(res - (p - w)) <= 1e-13);

  const Complex d = richardson_derivative([](Complex z) { return std::exp(z); }, Complex(0.3, 0.2), 1e-3);
  CHECK(std::abs(d - std::exp(Complex(0.3, 0.2))) <= 1e-11);

  const ComplexFunction poly = [](Complex z) { return (z - 1.0) * (z - Complex(2.0, 1.0)) * (z + 3.0); };
  CHECK(winding_number(poly, {0.5, 2.5, -0.5, 1.5}) == doctest::Approx(2.0));
  CHECK(winding_number(poly, {0.5, 1.5, -0.5, 0.5}) == doctest::Approx(1.0));
  CHECK(winding_number(poly, {3.0, 4.0, -0.5, 0.5}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("S is large next to every pole") {
  std::vector<double> line;
  for (double k : linspace(0.05, 6.0, 501)) line.push_back(std::abs(s_matrix(kShell, kOne, k).s));
  std::nth_element(line.begin(), line.begin() + line.size() / 2, line.end());
  const double median = line[line.size() / 2];
  for (const auto& st : shell_search().states) {
    const double d = 1e-3 * std::abs(st.k.imag());
    for (int j = 0; j < 8; ++j) {
      const Complex k = st.k + std::polar(d, 2.0 * kPi * j / 8);
      CHECK(std::abs(s_matrix(kShell, kOne, k).s) > 1e2 * median);
    }
  }
}

TEST_CASE("no zeros of J+ on the positive real axis") {
  double smallest = 1e300;
  for (double k : linspace(1e-3, 10.0, 20000)) smallest = std::min(smallest, std::abs(jost(kShell, kOne, k).plus));
  CHECK(smallest > 1e-3);
}

TEST_CASE("Gamow eigenfunction") {
  const auto& res = shell_search();
  for (const auto& st : res.states) {
    CHECK(gamow_eigenfunction(st, 0.0) == Complex(0.0));
    CHECK_THROWS_AS(gamow_eigenfunction(st, -1.0), std::invalid_argument);

    // purely outgoing tail, both from the exterior formula and from chi itself
    for (double r : linspace(2.0, 10.0, 81)) {
      const Complex e = std::exp(kI * st.k * r);
      CHECK(std::abs(gamow_eigenfunction(st, r) / e - st.norm) <= 1e-10 * std::abs(st.norm));
      CHECK(std::abs(st.norm * st.solution.value(r) / (st.j3 * e) - st.norm) <= 1e-10 * std::abs(st.norm));
    }

    for (double edge : {1.0, 2.0}) {
      const double left = std::nextafter(edge, 0.0);
      const double s = std::abs(gamow_eigenfunction_derivative(st, edge));
      CHECK(std::abs(gamow_eigenfunction(st, left) - gamow_eigenfunction(st, edge)) <= 1e-10 * s);
      CHECK(std::abs(gamow_eigenfunction_derivative(st, left) - gamow_eigenfunction_derivative(st, edge)) <=
            1e-10 * s);
    }

    // second-order convergence of the finite-difference residual
    auto residual = [&](double h) {
      double worst = 0.0;
      for (double r : {0.3, 0.5, 0.7, 1.3, 1.5, 1.7, 2.5, 3.0, 4.0}) {
        const Complex u = gamow_eigenfunction(st, r);
        const Complex d2 =
            (gamow_eigenfunction(st, r + h) - 2.0 * u + gamow_eigenfunction(st, r - h)) / (h * h);
        worst = std::max(worst, std::abs(-d2 + kShell(r) * u - st.k * st.k * u));
      }
      return worst;
    };
    CHECK(std::log2(residual(1e-2) / residual(5e-3)) == doctest::Approx(2.0).epsilon(0.05));
  }
}

TEST_CASE("barrier sweep narrows the first resonance") {
  double prev_width = 1e300;
  Complex k1;
  for (double v0 : {8.0, 50.0, 500.0}) {
    const auto res = find_resonances(make_shell(v0, 1.0, 2.0), kOne, kRegion);
    REQUIRE_FALSE(res.states.empty());
    k1 = res.states.front().k;
    CHECK(res.states.front().width < prev_width);
    prev_width = res.states.front().width;
  }
  CHECK(std::abs(k1.real() - kPi) <= 0.05 * kPi);
}

TEST_CASE("antibound zeros are reported separately") {
  // Too shallow to bind: the would-be bound state sits on the negative imaginary axis.
  const Potential well({1.0}, {-2.0});
  const auto res = find_resonances(well, kOne, {-0.5, 0.5, -2.0, -0.05});
  CHECK(res.states.empty());
  REQUIRE(res.axis_zeros.size() == 1);
  CHECK(std::abs(res.axis_zeros[0].real()) <= 1e-10);
  CHECK(res.axis_zeros[0].imag() < 0.0);
  CHECK(std::abs(jost(well, kOne, res.axis_zeros[0]).plus) <= 1e-10);
}

TEST_CASE("region validation") {
  CHECK_THROWS_AS(find_resonances(kShell, kOne, {-1.0, 1.0, -1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(find_resonances(kShell, kOne, {1.0, 1.0, -1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(find_resonances(kShell, kOne, {0.0, 1.0, -1.0, 0.0}, {.cell_size = 0.0}), std::invalid_argument);
  const auto res = find_resonances(kShell, kOne, kRegion);
  CHECK(res.contour.re_min > 0.0);
  CHECK(res.contour.im_max > 0.0);
}

TEST_CASE("truncation flag") {
  const auto res = find_resonances(kShell, kOne, kRegion, {.max_states = 2});
  CHECK(res.truncated);
  CHECK(res.states.size() == 2);
}

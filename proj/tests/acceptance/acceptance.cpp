// Acceptance suite: one PASS/FAIL line per criterion, INFO lines for context.
// Exit status is nonzero when any selected criterion fails.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "radscat/criterion.hpp"
#include "radscat/errors.hpp"
#include "radscat/kernels.hpp"
#include "radscat/oracles/grid_scan.hpp"
#include "radscat/oracles/sine_transform.hpp"
#include "radscat/quadrature.hpp"
#include "radscat/resonance.hpp"
#include "radscat/spectral.hpp"
#include "radscat/verification.hpp"

using namespace radscat;

namespace {

const PhysicalScale kOne(1.0);
const double kInf = std::numeric_limits<double>::infinity();

const Potential& shell() {
  static const Potential pot = make_shell(8.0, 1.0, 2.0);
  return pot;
}

const ResonanceSearch& shell_search() {
  static const ResonanceSearch res = find_resonances(shell(), kOne, {0.0, 6.0, -2.0, 0.0});
  return res;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> info;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string cnum(Complex z) { return "(" + num(z.real()) + (z.imag() < 0 ? "" : "+") + num(z.imag()) + "i)"; }

// measured <= tol, recorded as "name=measured<=tol"
void bound(Outcome& o, const std::string& name, double measured, double tol) {
  o.require(measured <= tol, name + "=" + num(measured) + (measured <= tol ? "<=" : ">") + num(tol));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome c01_free_identities() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Potential free = Potential::free();
  std::vector<Complex> ks;
  for (double k : linspace(0.01, 10.0, 1000)) ks.emplace_back(k, 0.0);
  for (int i = 0; i < 1000; ++i) {
    // 40 x 25 lattice over [0.25, 10] x [-3, 3], skipping the real axis
    const double re = 0.25 + 9.75 * (i % 40) / 39.0;
    const double im = -3.0 + 6.0 * (i / 40 + 0.5) / 25.0;
    ks.emplace_back(re, im);
  }
  double jost_err = 0.0, s_err = 0.0;
  for (const auto& j : kernels::jost_grid(free, kOne, ks)) {
    jost_err = std::max({jost_err, std::abs(j.plus - 1.0), std::abs(j.minus - 1.0)});
    s_err = std::max(s_err, std::abs(j.minus / j.plus - 1.0));
  }
  const auto res = find_resonances(free, kOne, {0.0, 10.0, -3.0, 0.0});
  const double elapsed = seconds_since(t0);
  bound(o, "max|J+-1|,|J--1|", jost_err, 1e-12);
  bound(o, "max|S-1|", s_err, 1e-12);
  o.require(res.states.empty() && res.axis_zeros.empty() && res.other_zeros.empty(),
            "zeros found=" + std::to_string(res.states.size() + res.axis_zeros.size() + res.other_zeros.size()));
  bound(o, "time_s", elapsed, 1.0);
  return o;
}

Outcome c02_unitarity() {
  Outcome o;
  std::vector<Complex> ks;
  for (double k : linspace(0.01, 10.0, 1000)) ks.emplace_back(k, 0.0);
  double worst = 0.0;
  for (const auto& j : kernels::jost_grid(shell(), kOne, ks))
    worst = std::max(worst, std::abs(std::abs(j.minus / j.plus) - 1.0));
  bound(o, "max||S|-1|", worst, 1e-10);
  return o;
}

Outcome c03_proportionality() {
  Outcome o;
  double worst = 0.0;
  for (double e : linspace(0.2, 30.0, 50)) {
    const ContinuumState in = continuum_state(Family::in, shell(), kOne, e);
    const ContinuumState out = continuum_state(Family::out, shell(), kOne, e);
    const Complex s = s_matrix(shell(), kOne, in.solution().k()).s;
    for (double r : linspace(0.0, 6.0, 50))
      worst = std::max(worst, std::abs(in(r) - s * out(r)) / std::max(1.0, std::abs(in(r))));
  }
  bound(o, "max|E+ - S E-|/max(1,|E+|)", worst, 1e-12);
  return o;
}

Outcome c04_criterion() {
  Outcome o;
  const EnergyGrid grid;
  const CriterionReport rho = check_symmetry("rho", standing_measure_function(shell(), kOne), grid);
  const CriterionReport rho_pm = check_symmetry("rho_pm", lippmann_measure_function(kOne), grid);
  const CriterionReport jp = check_symmetry("J+", jost_plus_function(shell(), kOne), grid);
  o.require(rho.classification == Classification::normalization, "rho " + to_string(rho.classification));
  o.require(rho_pm.classification == Classification::normalization, "rho+- " + to_string(rho_pm.classification));
  o.require(jp.classification == Classification::physically_distinct, "J+ " + to_string(jp.classification));

  double gap = 0.0;
  for (Complex e : grid.points()) {
    const JostPair j = jost(shell(), kOne, wavenumber_of_energy(kOne, e));
    gap = std::max(gap, std::abs(j.plus - j.minus));
  }
  bound(o, "|dev(J+)-max|J+-J-||/max(1,.)", std::abs(jp.max_deviation - gap) / std::max(1.0, gap), 1e-12);
  o.info.push_back("J+ deviation " + num(jp.max_deviation) + ", max|J+-J-| " + num(gap) + ", " +
                   std::to_string(jp.samples) + " samples");

  for (Family fam : {Family::standing_wave, Family::in, Family::out}) {
    const CriterionReport rep = classify_eigensolution(fam, shell(), kOne, grid);
    const Classification want =
        fam == Family::standing_wave ? Classification::normalization : Classification::physically_distinct;
    o.require(rep.classification == want, std::string(to_string(fam)) + " " + to_string(rep.classification));
  }
  return o;
}

Outcome c05_finder_vs_oracle() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const ResonanceSearch res = find_resonances(shell(), kOne, {0.0, 6.0, -2.0, 0.0});
  const double t_finder = seconds_since(t0);
  const auto t1 = std::chrono::steady_clock::now();
  const auto scan =
      oracles::grid_scan_zeros([](Complex k) { return jost(shell(), kOne, k).plus; }, res.contour, 2000);
  const double t_oracle = seconds_since(t1);

  std::vector<Complex> found;
  for (const auto& st : res.states) found.push_back(st.k);
  for (Complex z : res.axis_zeros) found.push_back(z);
  for (Complex z : res.other_zeros) found.push_back(z);
  o.require(scan.zeros.size() == found.size(), "oracle zeros=" + std::to_string(scan.zeros.size()) +
                                                   " finder zeros=" + std::to_string(found.size()));
  double worst = scan.zeros.empty() ? kInf : 0.0;
  for (Complex z : scan.zeros) {
    double best = kInf;
    for (Complex f : found) best = std::min(best, std::abs(f - z));
    worst = std::max(worst, best);
  }
  bound(o, "max|k-k_oracle|", worst, 1e-8);
  o.require(res.winding == res.refined,
            "winding=" + std::to_string(res.winding) + " refined=" + std::to_string(res.refined));
  bound(o, "time_s", t_finder + t_oracle, 60.0);
  for (const auto& st : res.states) o.info.push_back("pole k=" + cnum(st.k));
  o.info.push_back("finder " + num(t_finder) + " s, oracle " + num(t_oracle) + " s");
  return o;
}

Outcome c06_residues() {
  Outcome o;
  const ResonanceSearch& res = shell_search();
  o.require(!res.states.empty(), "poles=" + std::to_string(res.states.size()));
  double gap = 0.0, partner = 0.0;
  for (std::size_t n = 0; n < res.states.size(); ++n) {
    const GamowState& st = res.states[n];
    double nearest = kInf;
    for (std::size_t m = 0; m < res.states.size(); ++m)
      if (m != n) nearest = std::min(nearest, std::abs(res.states[m].k - st.k));
    try {
      gap = std::max(gap, residue_norm(shell(), kOne, st.k, nearest).relative_gap);
      const Complex m2 = residue_norm(shell(), kOne, -std::conj(st.k), nearest).norm_sq;
      partner = std::max(partner, std::abs(m2 - std::conj(st.norm_sq)) / std::abs(st.norm_sq));
    } catch (const ResidueError& e) {
      gap = kInf;
      o.info.push_back(std::string("residue error: ") + e.what());
    }
  }
  bound(o, "contour vs derivative N^2", gap, 1e-6);
  bound(o, "|M^2-conj N^2|/|N^2|", partner, 1e-8);
  return o;
}

Outcome c07_gamow_structure() {
  Outcome o;
  const ResonanceSearch& res = shell_search();
  o.require(!res.states.empty(), "poles=" + std::to_string(res.states.size()));
  const Potential& pot = shell();
  const double b = pot.outer_radius();
  double tail = 0.0, jump = 0.0, order_err = 0.0;
  for (const GamowState& st : res.states) {
    for (double r : linspace(b, 5.0 * b, 201)) {
      const Complex ratio = st.solution.value(r) * st.norm / (st.j3 * std::exp(kI * st.k * r));
      tail = std::max(tail, std::abs(ratio - st.norm) / std::abs(st.norm));
    }
    for (std::size_t l = 1; l < pot.layer_count(); ++l) {
      const double edge = pot.left_edge(l);
      const double left = std::nextafter(edge, 0.0);
      const double s = std::max(std::abs(gamow_eigenfunction(st, edge)),
                                std::abs(gamow_eigenfunction_derivative(st, edge)));
      jump = std::max({jump, std::abs(gamow_eigenfunction(st, left) - gamow_eigenfunction(st, edge)) / s,
                       std::abs(gamow_eigenfunction_derivative(st, left) - gamow_eigenfunction_derivative(st, edge)) /
                           s});
    }
    auto residual = [&](double h) {
      double worst = 0.0;
      for (double r : {0.3, 0.5, 0.7, 1.3, 1.5, 1.7, 2.5, 3.0, 4.0}) {
        const Complex u = gamow_eigenfunction(st, r);
        const Complex d2 = (gamow_eigenfunction(st, r + h) - 2.0 * u + gamow_eigenfunction(st, r - h)) / (h * h);
        worst = std::max(worst, std::abs(-d2 + pot(r) * u - st.k * st.k * u));
      }
      return worst;
    };
    const double order = std::log2(residual(1e-2) / residual(5e-3));
    order_err = std::max(order_err, std::abs(order - 2.0));
    o.info.push_back("pole " + cnum(st.k) + ": FD order " + num(order));
  }
  bound(o, "tail variation", tail, 1e-10);
  bound(o, "continuity", jump, 1e-10);
  bound(o, "|order-2|", order_err, 0.1);
  return o;
}

Outcome c08_conjugate_pairs() {
  Outcome o;
  const ResonanceSearch& res = shell_search();
  o.require(!res.states.empty(), "poles=" + std::to_string(res.states.size()));
  double stated = 0.0, plus_mirror = 0.0, minus_conj = 0.0;
  for (const GamowState& st : res.states) {
    const Complex m = -std::conj(st.k);
    stated = std::max(stated, std::abs(jost(shell(), kOne, m).minus));
    plus_mirror = std::max(plus_mirror, std::abs(jost(shell(), kOne, m).plus));
    minus_conj = std::max(minus_conj, std::abs(jost(shell(), kOne, std::conj(st.k)).minus));
  }
  bound(o, "max|J-(-k*)|", stated, 1e-10);
  o.info.push_back("max|J+(-k*)| = " + num(plus_mirror) + " (growing partner is a zero of J+)");
  o.info.push_back("max|J-(k*)| = " + num(minus_conj) + " (J- vanishes at the conjugate, not the mirror)");
  return o;
}

Outcome c09_smeared_delta() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const GaussianSpec g{15.0, 1.5};
  const double r_max = 40.0;
  const QuadSpec quad{601, 2001, 1e-3};

  const Potential free = Potential::free();
  const auto free_rep = smeared_delta_check(Family::standing_wave, free, kOne, g, r_max, quad);
  const double exact = oracles::free_smeared_lhs(kOne, g, r_max, quad.n_energy);
  bound(o, "free vs sine transform", std::abs(free_rep.lhs - exact) / exact, 1e-4);
  o.info.push_back("free lhs " + num(free_rep.lhs) + ", oracle " + num(exact) + ", rhs " + num(free_rep.rhs));

  for (Family fam : {Family::standing_wave, Family::in, Family::out}) {
    const auto rep = smeared_delta_check(fam, shell(), kOne, g, r_max, quad);
    bound(o, std::string(to_string(fam)), rep.relative_error, 1e-3);
    o.require(rep.converged, std::string(to_string(fam)) + (rep.converged ? " converged" : " not converged"));
  }
  bound(o, "time_s", seconds_since(t0), 300.0);
  return o;
}

Outcome c10_parseval() {
  Outcome o;
  // psi = exp(-(r - 10)^2 / 2) cos(4 r) on [0, 20]
  RadialSamples psi{20.0, std::vector<Complex>(4001)};
  for (std::size_t j = 0; j < psi.values.size(); ++j) {
    const double r = psi.radius(j);
    if (std::abs(r - 10.0) <= 8.0) psi.values[j] = std::exp(-0.5 * (r - 10.0) * (r - 10.0)) * std::cos(4.0 * r);
  }
  const auto rw = simpson_weights(psi.values.size(), psi.spacing());
  std::vector<double> t(psi.values.size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = rw[j] * std::norm(psi.values[j]);
  const double nr = pairwise_sum(std::span<const double>(t));

  const auto es = linspace(0.005, 80.005, 8001);
  const auto ew = simpson_weights(es.size(), es[1] - es[0]);
  for (Family fam : {Family::standing_wave, Family::in, Family::out}) {
    const auto c = energy_transform(fam, shell(), kOne, psi, es).coefficients;
    std::vector<double> u(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) u[i] = ew[i] * std::norm(c[i]);
    const double ne = pairwise_sum(std::span<const double>(u));
    bound(o, std::string(to_string(fam)), std::abs(ne - nr) / nr, 1e-3);
  }
  return o;
}

Outcome c11_barrier_limit() {
  Outcome o;
  double prev = kInf;
  Complex k1{};
  for (double v0 : {8.0, 50.0, 500.0}) {
    const auto res = find_resonances(make_shell(v0, 1.0, 2.0), kOne, {0.0, 6.0, -2.0, 0.0});
    if (res.states.empty()) {
      o.require(false, "no pole at V0=" + num(v0));
      return o;
    }
    const GamowState& st = res.states.front();
    o.require(st.width < prev, "Gamma1(V0=" + num(v0) + ")=" + num(st.width));
    o.info.push_back("V0=" + num(v0) + ": k1=" + cnum(st.k) + " Gamma1=" + num(st.width) +
                     (st.residue_verified ? "" : " (residue from derivative only)"));
    prev = st.width;
    k1 = st.k;
  }
  bound(o, "|Re k1-pi|/pi at V0=500", std::abs(k1.real() - kPi) / kPi, 0.05);
  return o;
}

struct Criterion {
  const char* title;
  Outcome (*run)();
};

const std::map<int, Criterion> kCriteria = {
    {1, {"free-potential identities", c01_free_identities}},
    {2, {"S-matrix unitarity", c02_unitarity}},
    {3, {"in/out proportionality", c03_proportionality}},
    {4, {"criterion classifications", c04_criterion}},
    {5, {"resonance finder vs grid scan", c05_finder_vs_oracle}},
    {6, {"residue normalization", c06_residues}},
    {7, {"Gamow state structure", c07_gamow_structure}},
    {8, {"conjugate-pair spectrum", c08_conjugate_pairs}},
    {9, {"smeared delta normalization", c09_smeared_delta}},
    {10, {"Parseval isometry", c10_parseval}},
    {11, {"infinite-barrier limit", c11_barrier_limit}},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radscat acceptance suite"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "criterion number(s) to run; all when omitted")
      ->check(CLI::Range(1, static_cast<int>(kCriteria.size())));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty())
    for (const auto& [n, c] : kCriteria) selected.push_back(n);

  int failures = 0;
  for (int n : selected) {
    const Criterion& c = kCriteria.at(n);
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", n, c.title, o.detail.c_str());
    for (const auto& line : o.info) std::printf("INFO %2d %s\n", n, line.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}

#include "radscat/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "radscat/errors.hpp"
#include "radscat/kernels.hpp"
#include "radscat/quadrature.hpp"
#include "radscat/spectral.hpp"

namespace radscat {

namespace {

constexpr int kMaxPhaseDepth = 48;
constexpr int kMaxSplitDepth = 30;

double phase_step(Complex from, Complex to) {
  return std::remainder(std::arg(to) - std::arg(from), 2.0 * kPi);
}

// Change of arg f from a to b; bisects until every piece turns by less than
// pi/4 and the halves agree with the whole.
double segment_phase(const ComplexFunction& f, Complex a, Complex b, Complex fa, Complex fb,
                     int depth = 0) {
  const Complex m = 0.5 * (a + b);
  const Complex fm = f(m);
  if (!is_finite(fm) || fm == Complex(0.0))
    throw NumericalError("J+ vanishes or overflows on a scan contour");
  const double left = phase_step(fa, fm);
  const double right = phase_step(fm, fb);
  const double whole = phase_step(fa, fb);
  const bool resolved = std::abs(left) < kPi / 4 && std::abs(right) < kPi / 4 &&
                        std::abs(left + right - whole) < 1e-9;
  if (resolved || depth >= kMaxPhaseDepth) return left + right;
  return segment_phase(f, a, m, fa, fm, depth + 1) + segment_phase(f, m, b, fm, fb, depth + 1);
}

std::optional<Complex> newton(const ComplexFunction& f, Complex k, double tol) {
  for (int it = 0; it < 100; ++it) {
    const Complex fk = f(k);
    if (fk == Complex(0.0)) return k;
    const double h = 1e-6 * std::max(1.0, std::abs(k));
    const Complex step = fk / richardson_derivative(f, k, h);
    if (!is_finite(step)) return std::nullopt;
    k -= step;
    if (std::abs(step) < tol * std::abs(k)) {
      // Two more steps settle Im k when it is many orders below Re k.
      for (int polish = 0; polish < 2; ++polish) {
        const Complex fp = f(k);
        if (fp == Complex(0.0)) break;
        const Complex s = fp / richardson_derivative(f, k, 1e-6 * std::max(1.0, std::abs(k)));
        if (!is_finite(s) || std::abs(s) > 10.0 * tol * std::abs(k)) break;
        k -= s;
      }
      return k;
    }
  }
  return std::nullopt;
}

void roots_in_cell(const ComplexFunction& f, const KRegion& cell, int expected, int depth,
                   double tol, std::vector<Complex>& out) {
  if (expected <= 0) return;
  const Complex center{0.5 * (cell.re_min + cell.re_max), 0.5 * (cell.im_min + cell.im_max)};
  const double extent = std::max(cell.re_max - cell.re_min, cell.im_max - cell.im_min);
  if (expected == 1) {
    if (auto root = newton(f, center, tol); root && cell.contains(*root, 1e-3 * extent)) {
      out.push_back(*root);
      return;
    }
  }
  if (depth >= kMaxSplitDepth) {
    // Unresolvable cluster (multiple root): report the cell centre once per zero.
    for (int i = 0; i < expected; ++i) out.push_back(center);
    return;
  }
  const double xm = center.real(), ym = center.imag();
  const KRegion quads[4] = {{cell.re_min, xm, cell.im_min, ym},
                            {xm, cell.re_max, cell.im_min, ym},
                            {cell.re_min, xm, ym, cell.im_max},
                            {xm, cell.re_max, ym, cell.im_max}};
  for (const KRegion& q : quads) {
    const int m = static_cast<int>(std::lround(winding_number(f, q)));
    roots_in_cell(f, q, m, depth + 1, tol, out);
  }
}

struct ScanGrid {
  KRegion rect;
  int nx = 1;
  int ny = 1;

  Complex node(int i, int j) const {
    const double x = i == nx ? rect.re_max : rect.re_min + (rect.re_max - rect.re_min) * i / nx;
    const double y = j == ny ? rect.im_max : rect.im_min + (rect.im_max - rect.im_min) * j / ny;
    return {x, y};
  }
  std::size_t node_index(int i, int j) const { return static_cast<std::size_t>(j) * (nx + 1) + i; }
  std::size_t h_index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  std::size_t v_index(int i, int j) const { return static_cast<std::size_t>(j) * (nx + 1) + i; }
  KRegion cell(int i, int j) const {
    const Complex lo = node(i, j), hi = node(i + 1, j + 1);
    return {lo.real(), hi.real(), lo.imag(), hi.imag()};
  }
};

KRegion contour_for(const KRegion& region) {
  const bool finite = std::isfinite(region.re_min) && std::isfinite(region.re_max) &&
                      std::isfinite(region.im_min) && std::isfinite(region.im_max);
  if (!finite || !(region.re_max > region.re_min) || !(region.im_max > region.im_min))
    throw std::invalid_argument("search region must be a non-degenerate finite rectangle");
  KRegion c = region;
  if (c.re_min == 0.0) c.re_min = 1e-4 * (region.re_max - region.re_min);
  if (c.im_max == 0.0) c.im_max = 1e-3 * (region.im_max - region.im_min);
  if (c.re_min <= 0.0 && c.re_max >= 0.0 && c.im_min <= 0.0 && c.im_max >= 0.0)
    throw std::invalid_argument("search region must not contain k = 0");
  return c;
}

struct CellWork {
  int i, j, zeros;
};

struct ScanOutcome {
  ScanGrid grid;
  int winding = 0;
  std::vector<CellWork> work;
};

// Phase bookkeeping on the lattice: boundary winding plus the cells that hold zeros.
ScanOutcome scan_cells(const Potential& pot, const PhysicalScale& scale, const ComplexFunction& jplus,
                       const KRegion& rect, int nx, int ny) {
  ScanOutcome out;
  out.grid = ScanGrid{rect, nx, ny};
  const ScanGrid& g = out.grid;

  std::vector<Complex> nodes;
  nodes.reserve(static_cast<std::size_t>(g.nx + 1) * (g.ny + 1));
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i) nodes.push_back(g.node(i, j));
  const std::vector<Complex> values = kernels::jost_plus_grid(pot, scale, nodes);
  for (const Complex v : values)
    if (!is_finite(v) || v == Complex(0.0))
      throw NumericalError("J+ vanishes or overflows on a scan node; shift the region slightly");

  // Phase change along every grid edge, oriented in +Re (horizontal) or +Im (vertical).
  std::vector<double> hphase(static_cast<std::size_t>(g.nx) * (g.ny + 1));
  std::vector<double> vphase(static_cast<std::size_t>(g.nx + 1) * g.ny);
  kernels::parallel_for(hphase.size(), [&](std::size_t e) {
    const int i = static_cast<int>(e % g.nx), j = static_cast<int>(e / g.nx);
    hphase[e] = segment_phase(jplus, g.node(i, j), g.node(i + 1, j),
                              values[g.node_index(i, j)], values[g.node_index(i + 1, j)]);
  });
  kernels::parallel_for(vphase.size(), [&](std::size_t e) {
    const int i = static_cast<int>(e % (g.nx + 1)), j = static_cast<int>(e / (g.nx + 1));
    vphase[e] = segment_phase(jplus, g.node(i, j), g.node(i, j + 1),
                              values[g.node_index(i, j)], values[g.node_index(i, j + 1)]);
  });

  double boundary = 0.0;
  for (int i = 0; i < g.nx; ++i) boundary += hphase[g.h_index(i, 0)] - hphase[g.h_index(i, g.ny)];
  for (int j = 0; j < g.ny; ++j) boundary += vphase[g.v_index(g.nx, j)] - vphase[g.v_index(0, j)];
  const double boundary_turns = boundary / (2.0 * kPi);
  out.winding = static_cast<int>(std::lround(boundary_turns));
  if (std::abs(boundary_turns - out.winding) > 0.05)
    throw NumericalError("argument principle did not return an integer around the search region");

  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double turns = (hphase[g.h_index(i, j)] + vphase[g.v_index(i + 1, j)] -
                            hphase[g.h_index(i, j + 1)] - vphase[g.v_index(i, j)]) /
                           (2.0 * kPi);
      const int m = static_cast<int>(std::lround(turns));
      if (std::abs(turns - m) > 0.05)
        throw NumericalError("non-integer winding on a scan cell; reduce cell_size");
      if (m > 0) out.work.push_back({i, j, m});
      if (m < 0) throw NumericalError("negative winding on a scan cell: J+ has a pole in the region");
    }
  return out;
}

double nearest_distance(Complex k, const std::vector<Complex>& zeros) {
  double d = 2.0 * std::abs(k.real());  // the mirror pole at -conj(k)
  if (d == 0.0) d = std::numeric_limits<double>::infinity();
  for (Complex z : zeros)
    if (z != k) d = std::min(d, std::abs(z - k));
  return d;
}

}  // namespace

std::string to_string(GamowKind kind) { return kind == GamowKind::decaying ? "decaying" : "growing"; }

Complex contour_residue(const ComplexFunction& f, Complex center, double radius, int points) {
  if (points < 8) throw std::invalid_argument("contour needs at least 8 nodes");
  std::vector<Complex> terms(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) {
    const Complex phase = std::polar(1.0, 2.0 * kPi * j / points);
    terms[static_cast<std::size_t>(j)] = f(center + radius * phase) * phase;
  }
  return radius / static_cast<double>(points) * pairwise_sum(terms);
}

Complex richardson_derivative(const ComplexFunction& f, Complex z, double h) {
  auto central = [&](double s) { return (f(z + s) - f(z - s)) / (2.0 * s); };
  const Complex d1 = central(h), d2 = central(h / 2), d4 = central(h / 4);
  const Complex r1 = (4.0 * d2 - d1) / 3.0;
  const Complex r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

double winding_number(const ComplexFunction& f, const KRegion& rect) {
  const Complex corners[4] = {{rect.re_min, rect.im_min},
                              {rect.re_max, rect.im_min},
                              {rect.re_max, rect.im_max},
                              {rect.re_min, rect.im_max}};
  Complex values[4];
  for (int i = 0; i < 4; ++i) {
    values[i] = f(corners[i]);
    if (!is_finite(values[i]) || values[i] == Complex(0.0))
      throw NumericalError("J+ vanishes or overflows on a scan contour");
  }
  double total = 0.0;
  for (int i = 0; i < 4; ++i)
    total += segment_phase(f, corners[i], corners[(i + 1) % 4], values[i], values[(i + 1) % 4]);
  return total / (2.0 * kPi);
}

ResidueEstimate residue_norm(const Potential& pot, const PhysicalScale& scale, Complex k_pole,
                             double nearest_pole_distance) {
  const double kabs = std::abs(k_pole);
  double radius = std::max(1e-4 * kabs, std::min(0.25 * nearest_pole_distance, 1e-2 * kabs));
  radius = std::min(radius, 0.5 * nearest_pole_distance);

  const ComplexFunction s = [&](Complex k) {
    const JostPair j = jost(pot, scale, k);
    return j.minus / j.plus;
  };
  const ComplexFunction jplus = [&](Complex k) { return jost(pot, scale, k).plus; };

  ResidueEstimate est;
  est.radius = radius;
  est.contour = contour_residue(s, k_pole, radius, 128);
  const Complex slope = richardson_derivative(jplus, k_pole, 1e-3 * std::max(1.0, kabs));
  est.derivative = jost(pot, scale, k_pole).minus / slope;
  est.norm_sq = kI * est.contour;
  est.relative_gap = std::abs(est.contour - est.derivative) / std::abs(est.derivative);
  if (!(est.relative_gap <= 1e-6)) {
    std::ostringstream msg;
    msg << "ill-conditioned residue at k = " << k_pole << ": contour " << est.contour
        << " vs derivative " << est.derivative << " (relative gap " << est.relative_gap << ")";
    throw ResidueError(msg.str());
  }
  return est;
}

GamowState make_gamow_state(const Potential& pot, const PhysicalScale& scale, Complex k_pole,
                            double nearest_pole_distance) {
  GamowState st{.kind = GamowKind::decaying,
                .k = k_pole,
                .z = k_pole * k_pole / scale.kappa(),
                .solution = solve_regular(pot, scale, k_pole)};
  st.energy = st.z.real();
  st.width = -2.0 * st.z.imag();
  st.j3 = st.solution.j3();
  try {
    st.norm_sq = residue_norm(pot, scale, k_pole, nearest_pole_distance).norm_sq;
    st.residue_verified = true;
  } catch (const ResidueError&) {
    const Complex slope = richardson_derivative(
        [&](Complex k) { return jost(pot, scale, k).plus; }, k_pole, 1e-3 * std::max(1.0, std::abs(k_pole)));
    st.norm_sq = kI * jost(st.solution).minus / slope;
    st.residue_verified = false;
  }
  st.norm = sqrt_branch(st.norm_sq);
  return st;
}

GamowState growing_partner(const GamowState& state) {
  const Complex k = -std::conj(state.k);
  GamowState p{.kind = state.kind == GamowKind::decaying ? GamowKind::growing : GamowKind::decaying,
               .k = k,
               .z = std::conj(state.z),
               .energy = state.energy,
               .width = state.width,
               .norm_sq = std::conj(state.norm_sq),
               .norm = std::conj(state.norm),
               .residue_verified = state.residue_verified,
               .solution = solve_regular(state.solution.potential(), state.solution.scale(), k)};
  p.j3 = p.solution.j3();
  return p;
}

Complex gamow_eigenfunction(const GamowState& state, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("radius must be non-negative");
  if (r >= state.solution.potential().outer_radius()) return state.norm * std::exp(kI * state.k * r);
  return state.norm * state.solution.value(r) / state.j3;
}

Complex gamow_eigenfunction_derivative(const GamowState& state, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("radius must be non-negative");
  if (r >= state.solution.potential().outer_radius())
    return kI * state.k * state.norm * std::exp(kI * state.k * r);
  return state.norm * state.solution.derivative(r) / state.j3;
}

ResonanceSearch find_resonances(const Potential& pot, const PhysicalScale& scale,
                                const KRegion& region, const ResonanceOptions& options) {
  if (!(options.cell_size > 0.0)) throw std::invalid_argument("cell_size must be positive");
  ResonanceSearch result;
  result.contour = contour_for(region);
  const KRegion& rect = result.contour;

  const int nx = std::max(1, static_cast<int>(std::ceil((rect.re_max - rect.re_min) / options.cell_size)));
  const int ny = std::max(1, static_cast<int>(std::ceil((rect.im_max - rect.im_min) / options.cell_size)));
  if (static_cast<double>(nx) * ny > 4e6)
    throw std::invalid_argument("scan grid too fine for the region; increase cell_size");

  const ComplexFunction jplus = [&](Complex k) { return jost(pot, scale, k).plus; };

  // A zero sitting exactly on an interior grid line (typically Re k = 0 for a region
  // symmetric about the imaginary axis) stalls the phase tracking; a slightly
  // different lattice moves the lines off it. A zero on the outer contour fails every time.
  ScanOutcome scan;
  for (int attempt = 0;; ++attempt) {
    try {
      scan = scan_cells(pot, scale, jplus, rect, nx + attempt, ny + attempt);
      break;
    } catch (const NumericalError&) {
      if (attempt == 2) throw;
    }
  }
  result.winding = scan.winding;
  const ScanGrid& grid = scan.grid;
  const std::vector<CellWork>& work = scan.work;

  std::vector<std::vector<Complex>> per_cell(work.size());
  kernels::parallel_for(work.size(), [&](std::size_t c) {
    roots_in_cell(jplus, grid.cell(work[c].i, work[c].j), work[c].zeros, 0, options.root_tolerance,
                  per_cell[c]);
  });

  std::vector<Complex> zeros;
  for (const auto& cell : per_cell) zeros.insert(zeros.end(), cell.begin(), cell.end());
  std::sort(zeros.begin(), zeros.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  result.refined = static_cast<int>(zeros.size());
  if (result.refined != result.winding) {
    std::ostringstream msg;
    msg << "missed roots: argument principle counts " << result.winding << " zeros of J+ but "
        << result.refined << " were refined";
    throw MissedRootsError(msg.str(), result.winding, result.refined);
  }

  std::vector<Complex> decaying;
  for (Complex z : zeros) {
    if (std::abs(z.real()) <= 1e-10 * std::abs(z))
      result.axis_zeros.push_back(z);
    else if (z.real() > 0.0 && z.imag() < 0.0)
      decaying.push_back(z);
    else
      result.other_zeros.push_back(z);
  }
  if (decaying.size() > options.max_states) {
    decaying.resize(options.max_states);
    result.truncated = true;
  }
  std::vector<std::optional<GamowState>> built(decaying.size());
  kernels::parallel_for(decaying.size(), [&](std::size_t n) {
    built[n].emplace(make_gamow_state(pot, scale, decaying[n], nearest_distance(decaying[n], zeros)));
  });
  result.states.reserve(built.size());
  for (auto& st : built) result.states.push_back(std::move(*st));
  return result;
}

}  // namespace radscat

#include "radscat/oracles/grid_scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace radscat::oracles {

namespace {

using Fn = std::function<Complex(Complex)>;

double turn(Complex a, Complex b) { return std::remainder(std::arg(b) - std::arg(a), 2.0 * kPi); }

// Phase change from a to b; an edge that turns by more than pi/2 is split until
// every piece turns by less, so a zero hugging the edge is attributed correctly.
double edge_turn(const Fn& f, Complex a, Complex b, Complex fa, Complex fb, int depth = 0) {
  const double t = turn(fa, fb);
  if (std::abs(t) <= 0.5 * kPi || depth > 40) return t;
  const Complex m = 0.5 * (a + b);
  const Complex fm = f(m);
  return edge_turn(f, a, m, fa, fm, depth + 1) + edge_turn(f, m, b, fm, fb, depth + 1);
}

int rect_winding(const Fn& f, double x0, double x1, double y0, double y1) {
  const Complex c[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  Complex v[4];
  for (int i = 0; i < 4; ++i) v[i] = f(c[i]);
  double total = 0.0;
  for (int i = 0; i < 4; ++i) total += edge_turn(f, c[i], c[(i + 1) % 4], v[i], v[(i + 1) % 4]);
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

// Quarters are enlarged by 10% on every side so that a zero lying on a shared
// inner edge sits strictly inside at least one of them.
void bisect(const Fn& f, double x0, double x1, double y0, double y1, int zeros, double tolerance,
            std::vector<Complex>& out, int depth = 0) {
  if (std::max(x1 - x0, y1 - y0) < tolerance || depth > 80) {
    for (int i = 0; i < zeros; ++i) out.emplace_back(0.5 * (x0 + x1), 0.5 * (y0 + y1));
    return;
  }
  const double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
  const double px = 0.05 * (x1 - x0), py = 0.05 * (y1 - y0);
  const double qx[2][2] = {{x0, xm + px}, {xm - px, x1}};
  const double qy[2][2] = {{y0, ym + py}, {ym - py, y1}};
  int found = 0;
  for (int a = 0; a < 2 && found < zeros; ++a)
    for (int b = 0; b < 2 && found < zeros; ++b) {
      const int w = rect_winding(f, qx[a][0], qx[a][1], qy[b][0], qy[b][1]);
      if (w > 0) {
        const int take = std::min(w, zeros - found);
        bisect(f, qx[a][0], qx[a][1], qy[b][0], qy[b][1], take, tolerance, out, depth + 1);
        found += take;
      }
    }
  for (; found < zeros; ++found) out.emplace_back(xm, ym);  // unresolved: report the centre
}

}  // namespace

GridScanResult grid_scan_zeros(const Fn& f, const KRegion& rect, int n, double tolerance) {
  if (n < 1) throw std::invalid_argument("grid needs at least one cell");
  const double dx = (rect.re_max - rect.re_min) / n, dy = (rect.im_max - rect.im_min) / n;
  const long m = n;
  const auto node = [&](long i, long j) { return Complex{rect.re_min + i * dx, rect.im_min + j * dy}; };
  const auto at = [&](long i, long j) { return static_cast<std::size_t>(j * (m + 1) + i); };

  std::vector<Complex> v(static_cast<std::size_t>((m + 1) * (m + 1)));
#pragma omp parallel for schedule(static)
  for (long j = 0; j <= m; ++j)
    for (long i = 0; i <= m; ++i) v[at(i, j)] = f(node(i, j));

  // hturn(i, j): node(i, j) -> node(i+1, j); vturn(i, j): node(i, j) -> node(i, j+1)
  std::vector<double> hturn(static_cast<std::size_t>(m * (m + 1)));
  std::vector<double> vturn(static_cast<std::size_t>(m * (m + 1)));
#pragma omp parallel for schedule(dynamic, 16)
  for (long j = 0; j <= m; ++j)
    for (long i = 0; i <= m; ++i) {
      if (i < m)
        hturn[static_cast<std::size_t>(j * m + i)] =
            edge_turn(f, node(i, j), node(i + 1, j), v[at(i, j)], v[at(i + 1, j)]);
      if (j < m)
        vturn[static_cast<std::size_t>(j * (m + 1) + i)] =
            edge_turn(f, node(i, j), node(i, j + 1), v[at(i, j)], v[at(i, j + 1)]);
    }

  struct Flag {
    long i, j;
    int w;
  };
  std::vector<Flag> flagged;
  for (long j = 0; j < m; ++j)
    for (long i = 0; i < m; ++i) {
      const double total = hturn[static_cast<std::size_t>(j * m + i)] +
                           vturn[static_cast<std::size_t>(j * (m + 1) + i + 1)] -
                           hturn[static_cast<std::size_t>((j + 1) * m + i)] -
                           vturn[static_cast<std::size_t>(j * (m + 1) + i)];
      const int w = static_cast<int>(std::lround(total / (2.0 * kPi)));
      if (w != 0) flagged.push_back({i, j, w});
    }

  GridScanResult res;
  res.cells_flagged = static_cast<int>(flagged.size());
  std::vector<std::vector<Complex>> found(flagged.size());
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < static_cast<long>(flagged.size()); ++c) {
    const Flag& fl = flagged[static_cast<std::size_t>(c)];
    bisect(f, rect.re_min + fl.i * dx, rect.re_min + (fl.i + 1) * dx, rect.im_min + fl.j * dy,
           rect.im_min + (fl.j + 1) * dy, std::abs(fl.w), tolerance, found[static_cast<std::size_t>(c)]);
  }
  for (auto& cell : found) res.zeros.insert(res.zeros.end(), cell.begin(), cell.end());
  std::sort(res.zeros.begin(), res.zeros.end(),
            [](Complex a, Complex b) { return a.real() < b.real(); });
  return res;
}

}  // namespace radscat::oracles

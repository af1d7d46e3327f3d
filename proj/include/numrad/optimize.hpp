#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "numrad/matrix.hpp"

namespace numrad {

struct Maximum {
  double x = 0.0;
  double value = -INFINITY;
  std::size_t evaluations = 0;
};

/// Golden-section search for a maximum of f on [lo, hi], stopping once the
/// bracket is narrower than tol. Equal values move the bracket left, so the
/// smaller abscissa wins ties.
template <class F>
Maximum golden_maximize(F&& f, double lo, double hi, double tol, std::size_t max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  std::size_t evals = 2, iter = 0;
  while (b - a > tol) {
    if (++iter > max_iter) {
      throw ConvergenceError("golden_maximize: bracket [" + std::to_string(a) + ", " +
                                 std::to_string(b) + "] still wider than " + std::to_string(tol),
                             iter);
    }
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  if (fc >= fd) return {c, fc, evals};
  return {d, fd, evals};
}

/// Indices of local maxima of a periodic sampled function (v[k] >= both
/// neighbours), ordered by decreasing value then increasing index, at most
/// max_count of them.
std::vector<std::size_t> periodic_local_maxima(std::span<const double> v, std::size_t max_count);

/// Wraps an angle into [0, 2 pi).
double wrap_angle(double x);

struct PeriodicSearch {
  std::size_t max_brackets = 5;
  double x_tol = 1e-12;
};

/// Maximizes a 2 pi-periodic function sampled on the uniform grid `grid`.
///
/// The best local maxima of the grid (up to max_brackets) are refined by
/// golden section on [x_k - h, x_k + h]; a grid point is kept when it is at
/// least as good as the refined point. `can_skip(grid_value, best_value)`
/// lets the caller prune brackets that provably cannot beat the incumbent.
/// Values within `tie` of each other are equal and the smaller angle wins.
template <class F, class Skip>
Maximum periodic_maximize(std::span<const double> grid, F&& f, const PeriodicSearch& opts,
                          Skip&& can_skip, double tie) {
  const std::size_t n = grid.size();
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
  Maximum best;
  bool have_best = false;
  for (std::size_t k : periodic_local_maxima(grid, opts.max_brackets)) {
    if (have_best && can_skip(grid[k], best.value)) continue;
    const double xk = h * static_cast<double>(k);
    Maximum m = golden_maximize(f, xk - h, xk + h, opts.x_tol);
    best.evaluations += m.evaluations;
    if (grid[k] >= m.value) {
      m.x = xk;
      m.value = grid[k];
    }
    m.x = wrap_angle(m.x);
    const double diff = m.value - best.value;
    if (!have_best || diff > tie || (std::abs(diff) <= tie && m.x < best.x)) {
      best.x = m.x;
      best.value = m.value;
      have_best = true;
    }
  }
  return best;
}

}  // namespace numrad

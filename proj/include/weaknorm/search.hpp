#pragma once

// One-dimensional sup search: grid scan followed by golden-section polish.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace weaknorm {

struct SupResult {
  double value = 0.0;
  double argmax = 0.0;
};

/// n points log-spaced on [lo, hi], endpoints included.
inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi >= lo) || n == 0) {
    throw std::invalid_argument("log_grid: need 0 < lo <= hi and n >= 1");
  }
  std::vector<double> grid(n);
  if (n == 1) {
    grid[0] = hi;
    return grid;
  }
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = lo * std::exp(step * static_cast<double>(i));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

/// Golden-section maximization of f on [a, b]; stops when the bracket is
/// narrower than tol. Also compares against the endpoints so a monotone
/// objective returns its boundary value.
template <class F>
SupResult golden_maximize(F&& f, double a, double b, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  SupResult best{f(a), a};
  if (const double fb = f(b); fb > best.value) best = {fb, b};
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  if (f1 > best.value) best = {f1, x1};
  if (f2 > best.value) best = {f2, x2};
  return best;
}

/// Scan a sorted grid, then polish between the neighbours of the best point.
template <class F>
SupResult grid_then_golden(F&& f, const std::vector<double>& grid, double tol) {
  if (grid.empty()) throw std::invalid_argument("grid_then_golden: empty grid");
  std::size_t best_i = 0;
  double best_v = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  SupResult best{best_v, grid[best_i]};
  const double lo = grid[best_i == 0 ? 0 : best_i - 1];
  const double hi = grid[best_i + 1 < grid.size() ? best_i + 1 : best_i];
  if (hi > lo) {
    const SupResult polished = golden_maximize(f, lo, hi, tol);
    if (polished.value > best.value) best = polished;
  }
  return best;
}

}  // namespace weaknorm

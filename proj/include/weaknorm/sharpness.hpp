#pragma once

// Extremal family f_k with f_k*(t) = 1 - t^k on [0, 1] and the functionals
//
//   G_k(w) = sup_{0<t<1} w(t) (1 - t^k)            = ||f_k||*_w
//   H_k(w) = sup_{0<t<1} w(t) (1 - t^k / (k + 1))  = ||f_k||_w
//   K_k(w) = H_k(w) / G_k(w),   K(w) = inf_k K_k(w).
//
// K_k is oriented as ||f_k||_w / ||f_k||*_w >= 1, so it bounds the best lower
// constant Theta(w) = inf_f ||f||_w / ||f||*_w from above. For power weights
// K_k(w_p) = (k + 1)^{1/(k p)}, decreasing to 1 as k grows.

#include <optional>
#include <vector>

#include "weaknorm/search.hpp"
#include "weaknorm/weights.hpp"

namespace weaknorm {

struct KappaReport {
  double kappa = 0.0;
  double G = 0.0;
  double H = 0.0;
  double K = 0.0;
  std::optional<double> closed_form_K;  // power weights only
  double argmax_t_G = 0.0;
  double argmax_t_H = 0.0;
};

struct PowerClosedForm {
  double G = 0.0;
  double H = 0.0;
  double K = 0.0;
};

struct ThetaSweep {
  double value = 0.0;  // min of K_k over the grid
  double kappa_at_min = 0.0;
  /// The minimum sits on the first or last grid point; the infimum is then
  /// likely a limit outside the sampled range.
  bool boundary = false;
  std::vector<KappaReport> rows;
};

/// 1 - t^k.
double f_star_kappa(double kappa, double t);

/// 1 - t^k / (k + 1).
double f_double_star_kappa(double kappa, double t);

SupResult G_kappa(const Weight& w, double kappa);
SupResult H_kappa(const Weight& w, double kappa);

/// Throws std::underflow_error when G_k is not a positive normal number.
KappaReport K_kappa(const Weight& w, double kappa);

PowerClosedForm closed_form_GHK_power(double p, double kappa);

/// K_k on a geometric grid of n_kappa points in [kappa_min, kappa_max].
/// Ties resolve toward the larger kappa.
ThetaSweep theta_upper_bound(const Weight& w, double kappa_min = 1e-2, double kappa_max = 1e3,
                             int n_kappa = 200);

}  // namespace weaknorm

#include "weaknorm/sharpness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace weaknorm {

namespace {

constexpr std::size_t kSideGridPoints = 128;
constexpr double kGridFloor = 1e-12;
constexpr double kTolerance = 1e-13;

void require_kappa(double kappa, const char* who) {
  if (!std::isfinite(kappa) || !(kappa > 0.0)) {
    throw std::invalid_argument(std::string(who) + ": kappa must be finite and > 0");
  }
}

// Log-spaced in t near 0 and in 1 - t near 1: the maximizer drifts to t = 1
// like (k p + 1)^{-1/k} for large k.
const std::vector<double>& unit_interval_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> left = log_grid(kGridFloor, 0.5, kSideGridPoints);
    const std::vector<double> gaps = log_grid(kGridFloor, 0.5, kSideGridPoints);
    for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) {
      if (*it < 0.5) left.push_back(1.0 - *it);
    }
    return left;
  }();
  return grid;
}

template <class F>
SupResult sup_on_unit_interval(F&& objective) {
  return grid_then_golden(objective, unit_interval_grid(), kTolerance);
}

}  // namespace

double f_star_kappa(double kappa, double t) {
  require_kappa(kappa, "f_star_kappa");
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("f_star_kappa: t must be in [0, 1]");
  if (t == 0.0) return 1.0;
  return -std::expm1(kappa * std::log(t));
}

double f_double_star_kappa(double kappa, double t) {
  require_kappa(kappa, "f_double_star_kappa");
  if (!(t > 0.0 && t <= 1.0)) {
    throw std::invalid_argument("f_double_star_kappa: t must be in (0, 1]");
  }
  return 1.0 - std::pow(t, kappa) / (kappa + 1.0);
}

SupResult G_kappa(const Weight& w, double kappa) {
  require_kappa(kappa, "G_kappa");
  return sup_on_unit_interval([&](double t) { return w(t) * -std::expm1(kappa * std::log(t)); });
}

SupResult H_kappa(const Weight& w, double kappa) {
  require_kappa(kappa, "H_kappa");
  return sup_on_unit_interval(
      [&](double t) { return w(t) * (1.0 - std::pow(t, kappa) / (kappa + 1.0)); });
}

KappaReport K_kappa(const Weight& w, double kappa) {
  const SupResult g = G_kappa(w, kappa);
  const SupResult h = H_kappa(w, kappa);
  if (!(g.value >= std::numeric_limits<double>::min())) {
    throw std::underflow_error("K_kappa: G underflows for kappa=" + std::to_string(kappa));
  }
  KappaReport report;
  report.kappa = kappa;
  report.G = g.value;
  report.H = h.value;
  report.K = h.value / g.value;
  report.argmax_t_G = g.argmax;
  report.argmax_t_H = h.argmax;
  if (w.family() == WeightFamily::power) {
    report.closed_form_K = closed_form_GHK_power(w.p(), kappa).K;
  }
  return report;
}

PowerClosedForm closed_form_GHK_power(double p, double kappa) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw std::invalid_argument("closed_form_GHK_power: p must be > 1");
  }
  require_kappa(kappa, "closed_form_GHK_power");
  const double kp = kappa * p;
  const double shape = kp / (kp + 1.0);
  PowerClosedForm out;
  out.G = std::exp(-std::log1p(kp) / kp) * shape;
  out.H = std::exp((std::log1p(kappa) - std::log1p(kp)) / kp) * shape;
  out.K = std::exp(std::log1p(kappa) / kp);
  return out;
}

ThetaSweep theta_upper_bound(const Weight& w, double kappa_min, double kappa_max, int n_kappa) {
  if (!(kappa_min > 0.0) || !(kappa_max > kappa_min) || n_kappa < 2) {
    throw std::invalid_argument(
        "theta_upper_bound: need 0 < kappa_min < kappa_max and at least 2 points");
  }
  ThetaSweep sweep;
  const std::vector<double> kappas =
      log_grid(kappa_min, kappa_max, static_cast<std::size_t>(n_kappa));
  sweep.rows.reserve(kappas.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    sweep.rows.push_back(K_kappa(w, kappas[i]));
    if (sweep.rows[i].K <= sweep.rows[best].K) best = i;
  }
  sweep.value = sweep.rows[best].K;
  sweep.kappa_at_min = sweep.rows[best].kappa;
  sweep.boundary = best == 0 || best + 1 == kappas.size();
  return sweep;
}

}  // namespace weaknorm

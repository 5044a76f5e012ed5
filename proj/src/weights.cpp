#include "weaknorm/weights.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weaknorm/search.hpp"

namespace weaknorm {

namespace {

void require_p(double p, const char* who) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw std::invalid_argument(std::string(who) + ": p must be a finite number > 1");
  }
}

std::vector<double> monotonicity_sample() {
  std::vector<double> s = log_grid(1e-9, 1e9, 4001);
  // The |log s| kink of the log families sits at s = 1.
  for (int k = 1; k <= 12; ++k) {
    const double d = std::pow(10.0, -k);
    s.push_back(1.0 - d);
    s.push_back(1.0 + d);
  }
  s.push_back(1.0);
  std::sort(s.begin(), s.end());
  return s;
}

std::string format_param(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

// 5-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 5> kGaussNodes = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                               0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kGaussWeights = {0.2369268850561891, 0.4786286704993665,
                                                 0.5688888888888889, 0.4786286704993665,
                                                 0.2369268850561891};
constexpr int kMaxCells = 1000;
// Relative gap between one Gauss-Legendre panel and its two halves below
// which the halves are accepted (their own error is ~2^-10 of the gap).
constexpr double kCellTolerance = 1e-8;
constexpr int kMaxBisections = 40;

}  // namespace

std::string to_string(WeightFamily family) {
  switch (family) {
    case WeightFamily::power: return "power";
    case WeightFamily::power_log: return "powerlog";
    case WeightFamily::power_log_log: return "powerloglog";
    case WeightFamily::custom: return "custom";
  }
  return "unknown";
}

Weight::Weight(WeightFamily family, Evaluator evaluator, double p, std::optional<double> q,
               std::optional<double> r, std::string label)
    : family_(family),
      evaluator_(std::move(evaluator)),
      p_(p),
      q_(q),
      r_(r),
      label_(std::move(label)) {}

std::string Weight::spec() const {
  if (family_ == WeightFamily::custom) return label_;
  std::string out = to_string(family_) + ":p=" + format_param(p_);
  if (q_) out += ",q=" + format_param(*q_);
  if (r_) out += ",r=" + format_param(*r_);
  return out;
}

double power_weight_value(double p, double s) { return std::pow(s, 1.0 / p); }

double power_log_weight_value(double p, double q, double s) {
  return std::pow(s, 1.0 / p) * std::pow(std::fabs(std::log(s)) + 1.0, 1.0 / q);
}

double power_log_log_weight_value(double p, double q, double r, double s) {
  const double abs_log = std::fabs(std::log(s));
  return std::pow(s, 1.0 / p) * std::pow(abs_log + 1.0, q) * std::pow(std::log(abs_log + 3.0), r);
}

bool sampled_non_decreasing(const Weight::Evaluator& w) {
  static const std::vector<double> sample = monotonicity_sample();
  double prev = 0.0;
  for (double s : sample) {
    const double v = w(s);
    if (!std::isfinite(v) || !(v > 0.0)) return false;
    if (v < prev * (1.0 - 1e-12)) return false;
    prev = v;
  }
  return true;
}

Weight Weight::custom(Evaluator evaluator, std::string label, Admissibility admissibility) {
  if (!evaluator) throw std::invalid_argument("custom weight: empty evaluator");
  Weight w(WeightFamily::custom, std::move(evaluator), 0.0, std::nullopt, std::nullopt,
           std::move(label));
  w.monotone_ = sampled_non_decreasing(w.evaluator_) && w(1e9) > w(1e-9);
  if (!w.monotone_ && admissibility == Admissibility::require_monotone) {
    throw std::invalid_argument("custom weight '" + w.label_ +
                                "' is not positive, non-decreasing and unbounded on the sample");
  }
  return w;
}

Weight make_power_weight(double p) {
  require_p(p, "power weight");
  return Weight(WeightFamily::power, [p](double s) { return power_weight_value(p, s); }, p,
                std::nullopt, std::nullopt, "w_p");
}

Weight make_power_log_weight(double p, double q, Admissibility admissibility) {
  require_p(p, "power-log weight");
  if (!std::isfinite(q) || q == 0.0) {
    throw std::invalid_argument("power-log weight: q must be finite and non-zero");
  }
  Weight w(WeightFamily::power_log, [p, q](double s) { return power_log_weight_value(p, q, s); },
           p, q, std::nullopt, "w_pq");
  w.monotone_ = sampled_non_decreasing(w.evaluator_);
  if (!w.monotone_ && admissibility == Admissibility::require_monotone) {
    throw std::invalid_argument("power-log weight p=" + format_param(p) + ", q=" +
                                format_param(q) +
                                " decreases near s = 1 (needs |q| >= p); not an admissible weight");
  }
  return w;
}

Weight make_power_log_log_weight(double p, double q, double r, Admissibility admissibility) {
  require_p(p, "power-log-log weight");
  if (!std::isfinite(q) || !std::isfinite(r)) {
    throw std::invalid_argument("power-log-log weight: q and r must be finite");
  }
  Weight w(WeightFamily::power_log_log,
           [p, q, r](double s) { return power_log_log_weight_value(p, q, r, s); }, p, q, r,
           "w_pqr");
  w.monotone_ = sampled_non_decreasing(w.evaluator_);
  if (!w.monotone_ && admissibility == Admissibility::require_monotone) {
    throw std::invalid_argument("power-log-log weight p=" + format_param(p) + ", q=" +
                                format_param(q) + ", r=" + format_param(r) +
                                " is not non-decreasing; not an admissible weight");
  }
  return w;
}

namespace {

double gauss5(const Weight& w, double lo, double hi) {
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t k = 0; k < kGaussNodes.size(); ++k) {
    sum += kGaussWeights[k] / w(mid + half * kGaussNodes[k]);
  }
  return sum * half;
}

// Bisect until the two halves agree with the whole; smooth cells stop after
// one split, kinks (|log s| at s = 1) get localized.
double adaptive_cell(const Weight& w, double lo, double hi, double whole, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double left = gauss5(w, lo, mid);
  const double right = gauss5(w, mid, hi);
  const double halves = left + right;
  if (!std::isfinite(halves) || depth >= kMaxBisections ||
      std::fabs(halves - whole) <= kCellTolerance * std::fabs(halves)) {
    return halves;
  }
  return adaptive_cell(w, lo, mid, left, depth + 1) + adaptive_cell(w, mid, hi, right, depth + 1);
}

}  // namespace

std::optional<double> inverse_weight_integral(const Weight& w, double t, double quad_tol) {
  if (!(t > 0.0)) throw std::invalid_argument("inverse_weight_integral: t must be > 0");
  double sum = 0.0;
  double hi = t;
  for (int cell = 0; cell < kMaxCells; ++cell) {
    const double lo = 0.5 * hi;
    const double contribution = adaptive_cell(w, lo, hi, gauss5(w, lo, hi), 0);
    if (!std::isfinite(contribution)) return std::nullopt;
    sum += contribution;
    if (contribution < quad_tol * std::fabs(sum)) return sum;
    hi = lo;
  }
  return std::nullopt;
}

GammaEstimate gamma(const Weight& w, const GammaGrid& grid, double quad_tol) {
  if (!(grid.t_min > 0.0) || !(grid.t_max > grid.t_min) || grid.points < 2) {
    throw std::invalid_argument("gamma: grid needs 0 < t_min < t_max and at least 2 points");
  }
  if (!w.monotone()) {
    throw std::invalid_argument("gamma: weight '" + w.spec() + "' is not non-decreasing");
  }

  GammaEstimate est;
  est.quadrature_tolerance = quad_tol;
  bool integral_failed = false;

  // Objective in u = log t.
  auto objective = [&](double u) {
    const double t = std::exp(u);
    const auto integral = inverse_weight_integral(w, t, quad_tol);
    if (!integral) {
      integral_failed = true;
      return std::numeric_limits<double>::infinity();
    }
    return w(t) / t * *integral;
  };

  const double decades = std::log10(grid.t_max / grid.t_min);
  const double per_decade = static_cast<double>(grid.points - 1) / decades;
  constexpr double kWidenDecades = 3.0;

  std::array<double, 3> level_sup{};
  double best_value = -1.0;
  double best_u = 0.0;
  std::vector<double> best_grid;
  std::size_t best_index = 0;

  for (int level = 0; level < 3; ++level) {
    const double widen = std::pow(10.0, kWidenDecades * level);
    const double lo = grid.t_min / widen;
    const double hi = grid.t_max * widen;
    const auto n = static_cast<std::size_t>(
        level == 0 ? grid.points
                   : std::lround(per_decade * (decades + 2.0 * kWidenDecades * level)) + 1);
    const std::vector<double> ts = log_grid(lo, hi, n);
    std::vector<double> us(ts.size());
    double sup = -1.0;
    std::size_t sup_index = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      us[i] = std::log(ts[i]);
      const double v = objective(us[i]);
      if (integral_failed) {
        est.value = std::numeric_limits<double>::infinity();
        est.argmax_t = ts[i];
        est.grid_size += static_cast<int>(i + 1);
        est.diverged = true;
        return est;
      }
      if (v > sup) {
        sup = v;
        sup_index = i;
      }
    }
    if (sup > best_value) {
      best_value = sup;
      best_u = us[sup_index];
      best_index = sup_index;
      best_grid = std::move(us);
    }
    est.grid_size += static_cast<int>(n);
    level_sup[level] = sup;
  }

  if (level_sup[1] > 1.1 * level_sup[0] && level_sup[2] > 1.1 * level_sup[1]) {
    est.value = std::numeric_limits<double>::infinity();
    est.argmax_t = std::exp(best_u);
    est.diverged = true;
    return est;
  }

  const double lo_u = best_grid[best_index == 0 ? 0 : best_index - 1];
  const double hi_u = best_grid[std::min(best_index + 1, best_grid.size() - 1)];
  SupResult best{best_value, best_u};
  if (hi_u > lo_u) {
    const SupResult polished = golden_maximize(objective, lo_u, hi_u, 1e-10);
    if (polished.value > best.value) best = polished;
  }
  if (integral_failed) {
    est.value = std::numeric_limits<double>::infinity();
    est.diverged = true;
    est.argmax_t = std::exp(best.argmax);
    return est;
  }
  est.value = best.value;
  est.argmax_t = std::exp(best.argmax);
  if (est.value < 1.0 - 1e-9) {
    throw std::logic_error("gamma: estimate below 1 for a non-decreasing weight; quadrature failed");
  }
  return est;
}

double gamma_closed_power(double p) {
  require_p(p, "gamma_closed_power");
  return p / (p - 1.0);
}

}  // namespace weaknorm

#pragma once

// Weight functions w on (0, inf) and the Calderon functional
//
//   gamma(w) = sup_{t > 0} (w(t) / t) * int_0^t du / w(u).

#include <functional>
#include <optional>
#include <string>

namespace weaknorm {

enum class WeightFamily { power, power_log, power_log_log, custom };

std::string to_string(WeightFamily family);

/// Whether a constructor must insist on a non-decreasing weight.
///
/// `require_monotone` rejects parameter combinations that leave the class of
/// admissible weights (w(0+) = 0, non-decreasing, unbounded). `allow_kink`
/// still builds the weight but records `monotone() == false`; the sharpness
/// functionals only need w > 0 on (0, 1) and accept such weights, the norm
/// and gamma routines do not.
enum class Admissibility { require_monotone, allow_kink };

class Weight {
 public:
  using Evaluator = std::function<double(double)>;

  /// Library-only custom weight; validated on a log-spaced sample.
  static Weight custom(Evaluator evaluator, std::string label = "custom",
                       Admissibility admissibility = Admissibility::require_monotone);

  double operator()(double s) const { return evaluator_(s); }

  [[nodiscard]] WeightFamily family() const { return family_; }
  [[nodiscard]] double p() const { return p_; }
  [[nodiscard]] std::optional<double> q() const { return q_; }
  [[nodiscard]] std::optional<double> r() const { return r_; }
  [[nodiscard]] bool monotone() const { return monotone_; }
  [[nodiscard]] const std::string& label() const { return label_; }

  /// Short textual form, e.g. "powerlog:p=2,q=2".
  [[nodiscard]] std::string spec() const;

 private:
  friend Weight make_power_weight(double);
  friend Weight make_power_log_weight(double, double, Admissibility);
  friend Weight make_power_log_log_weight(double, double, double, Admissibility);

  Weight(WeightFamily family, Evaluator evaluator, double p, std::optional<double> q,
         std::optional<double> r, std::string label);

  WeightFamily family_;
  Evaluator evaluator_;
  double p_ = 0.0;
  std::optional<double> q_;
  std::optional<double> r_;
  bool monotone_ = true;
  std::string label_;
};

/// w_p(s) = s^{1/p}, p > 1.
Weight make_power_weight(double p);

/// w_{p,q}(s) = s^{1/p} (|log s| + 1)^{1/q}, p > 1, q != 0.
/// Non-decreasing exactly when |q| >= p.
Weight make_power_log_weight(double p, double q,
                             Admissibility admissibility = Admissibility::require_monotone);

/// w_{p,q,r}(s) = s^{1/p} (|log s| + 1)^q (log(|log s| + 3))^r, p > 1.
Weight make_power_log_log_weight(double p, double q, double r,
                                 Admissibility admissibility = Admissibility::require_monotone);

// Raw family formulas, no parameter checks.
double power_weight_value(double p, double s);
double power_log_weight_value(double p, double q, double s);
double power_log_log_weight_value(double p, double q, double r, double s);

/// True when w is positive and non-decreasing on a log-spaced sample of
/// (1e-9, 1e9), up to a relative slack of 1e-12.
bool sampled_non_decreasing(const Weight::Evaluator& w);

struct GammaGrid {
  double t_min = 1e-6;
  double t_max = 1e6;
  int points = 512;
};

struct GammaEstimate {
  double value = 0.0;  // +inf when diverged
  double argmax_t = 0.0;
  int grid_size = 0;
  double quadrature_tolerance = 0.0;
  bool diverged = false;
};

inline constexpr double kDefaultQuadTolerance = 1e-12;

/// int_0^t du / w(u) on a geometric mesh t, t/2, t/4, ... with 5-point
/// Gauss-Legendre per cell. Empty when the singularity at 0 is not
/// integrable (no convergence before the cell cap).
std::optional<double> inverse_weight_integral(const Weight& w, double t,
                                              double quad_tol = kDefaultQuadTolerance);

/// Numeric gamma(w): log grid sup, widened twice by three decades on each
/// side; growth by more than 10% at both widenings is reported as divergence.
GammaEstimate gamma(const Weight& w, const GammaGrid& grid = {},
                    double quad_tol = kDefaultQuadTolerance);

/// p / (p - 1), the value of gamma(w_p).
double gamma_closed_power(double p);

}  // namespace weaknorm

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "weaknorm/search.hpp"
#include "weaknorm/weights.hpp"

using namespace weaknorm;

namespace {

// Independent route to int_0^t du / w(u): substitute u = t e^{-x} and apply
// composite Simpson on x in [0, 120].
double simpson_inverse_integral(const Weight& w, double t) {
  const int n = 240000;
  const double h = 120.0 / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = i * h;
    const double u = t * std::exp(-x);
    const double f = u / w(u);
    const double coef = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += coef * f;
  }
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("power weight evaluates s^(1/p)") {
  CHECK(make_power_weight(2.0)(0.25) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(make_power_weight(2.0)(1.0) == 1.0);
  CHECK(make_power_weight(4.0)(16.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(make_power_weight(1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_power_weight(0.5), std::invalid_argument);
  CHECK_THROWS_AS(make_power_weight(std::nan("")), std::invalid_argument);
}

TEST_CASE("power-log weight formula and admissibility") {
  const double e = std::exp(1.0);
  CHECK(make_power_log_weight(2.0, 2.0)(1.0) == doctest::Approx(1.0));
  CHECK(power_log_weight_value(2.0, 1.0, e) == doctest::Approx(3.29744254).epsilon(1e-8));
  CHECK(power_log_weight_value(2.0, -1.0, e) == doctest::Approx(0.82436064).epsilon(1e-8));

  // |q| < p dips near s = 1: rejected unless explicitly allowed.
  CHECK_THROWS_AS(make_power_log_weight(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_power_log_weight(2.0, -1.0), std::invalid_argument);
  const Weight kinked = make_power_log_weight(2.0, 1.0, Admissibility::allow_kink);
  CHECK_FALSE(kinked.monotone());
  CHECK(kinked(e) == doctest::Approx(std::sqrt(e) * 2.0));
  CHECK(make_power_log_weight(2.0, -2.0).monotone());
  CHECK(make_power_log_weight(2.0, 3.0).monotone());
  CHECK_THROWS_AS(make_power_log_weight(2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_power_log_weight(1.0, 2.0), std::invalid_argument);
}

TEST_CASE("power-log-log weight formula") {
  CHECK(make_power_log_log_weight(2.0, 0.0, 0.0)(4.0) == doctest::Approx(2.0));
  CHECK(power_log_log_weight_value(2.0, 1.0, 0.0, 1.0) == 1.0);
  CHECK(make_power_log_log_weight(2.0, 0.0, 1.0)(1.0) == doctest::Approx(std::log(3.0)));
  CHECK_THROWS_AS(make_power_log_log_weight(2.0, 1.0, 0.0), std::invalid_argument);
  CHECK_FALSE(make_power_log_log_weight(2.0, 1.0, 1.0, Admissibility::allow_kink).monotone());
  CHECK_THROWS_AS(make_power_log_log_weight(0.9, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("built-in admissible weights are positive and non-decreasing on a wide sample") {
  const std::vector<Weight> weights = {
      make_power_weight(1.5),          make_power_weight(2.0),
      make_power_weight(10.0),         make_power_log_weight(2.0, 2.0),
      make_power_log_weight(2.0, -3.0), make_power_log_log_weight(2.0, 0.0, 1.0),
      make_power_log_log_weight(3.0, 0.2, -0.5)};
  const auto sample = log_grid(1e-9, 1e9, 20001);
  for (const auto& w : weights) {
    CAPTURE(w.spec());
    double prev = 0.0;
    for (double s : sample) {
      const double v = w(s);
      REQUIRE(v > 0.0);
      REQUIRE(v >= prev * (1.0 - 1e-12));
      prev = v;
    }
    CHECK(w(1e-9) < w(1.0));
    CHECK(w(1e9) > w(1.0));
  }
}

TEST_CASE("custom weights are validated") {
  CHECK_THROWS_AS(Weight::custom([](double s) { return 1.0 / s; }), std::invalid_argument);
  CHECK_THROWS_AS(Weight::custom([](double) { return 1.0; }), std::invalid_argument);
  CHECK_THROWS_AS(Weight::custom(nullptr), std::invalid_argument);
  CHECK(Weight::custom([](double s) { return std::cbrt(s); }).monotone());
}

TEST_CASE("gamma_closed_power and the constant integrand of w_p") {
  CHECK(gamma_closed_power(2.0) == 2.0);
  CHECK(gamma_closed_power(4.0) == doctest::Approx(4.0 / 3.0));
  CHECK(gamma_closed_power(1000.0) == doctest::Approx(1000.0 / 999.0));
  CHECK_THROWS_AS(gamma_closed_power(1.0), std::invalid_argument);

  // With int_0^t u^{-1/p} du = t^{1-1/p} / (1 - 1/p), the integrand
  // (t^{1/p} / t) * that integral is p/(p-1) for every t.
  for (double p : {1.5, 2.0, 4.0, 10.0}) {
    for (double t : {1e-6, 1e-2, 1.0, 37.0, 1e6}) {
      const double exact = std::pow(t, 1.0 - 1.0 / p) / (1.0 - 1.0 / p);
      CHECK(std::pow(t, 1.0 / p) / t * exact == doctest::Approx(gamma_closed_power(p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("inverse_weight_integral matches the antiderivative and a Simpson oracle") {
  for (double p : {1.5, 2.0, 4.0}) {
    const Weight w = make_power_weight(p);
    for (double t : {1e-4, 0.3, 1.0, 250.0}) {
      const double exact = std::pow(t, 1.0 - 1.0 / p) / (1.0 - 1.0 / p);
      const auto numeric = inverse_weight_integral(w, t);
      REQUIRE(numeric.has_value());
      CHECK(*numeric == doctest::Approx(exact).epsilon(1e-8));
    }
  }
  const Weight wpq = make_power_log_weight(2.0, 2.0);
  for (double t : {1e-3, 0.5, 1.0, 20.0}) {
    const auto numeric = inverse_weight_integral(wpq, t);
    REQUIRE(numeric.has_value());
    CHECK(*numeric == doctest::Approx(simpson_inverse_integral(wpq, t)).epsilon(1e-7));
  }
}

TEST_CASE("gamma of power weights is p/(p-1)") {
  for (double p : {1.5, 2.0, 4.0, 10.0}) {
    CAPTURE(p);
    const GammaEstimate est = gamma(make_power_weight(p));
    CHECK_FALSE(est.diverged);
    CHECK(std::fabs(est.value - p / (p - 1.0)) < 1e-4);
    CHECK(est.value >= 1.0 - 1e-9);
    CHECK(est.grid_size >= 512);
  }
}

TEST_CASE("gamma is invariant under scaling the weight") {
  for (double c : {1e-3, 0.5, 7.0, 1e4}) {
    const Weight base = make_power_log_weight(2.0, 2.0);
    const Weight scaled = Weight::custom([base, c](double s) { return c * base(s); });
    CHECK(gamma(scaled).value == doctest::Approx(gamma(base).value).epsilon(1e-10));
  }
}

TEST_CASE("gamma flags divergence") {
  // w(s) = s: int_0^t du/u is infinite.
  const GammaEstimate linear = gamma(Weight::custom([](double s) { return s; }));
  CHECK(linear.diverged);
  CHECK(std::isinf(linear.value));

  // Integrable at 0, but the integrand grows like log(t)/2 without bound.
  const Weight slow = Weight::custom(
      [](double s) { return s <= 1.0 ? std::sqrt(s) : s / (std::log(s) + 1.0); });
  const GammaEstimate growing = gamma(slow);
  CHECK(growing.diverged);
  CHECK(std::isinf(growing.value));

  CHECK_THROWS_AS(gamma(make_power_log_weight(2.0, 1.0, Admissibility::allow_kink)),
                  std::invalid_argument);
}

TEST_CASE("gamma of admissible log weights stays finite and above 1") {
  for (const Weight& w : {make_power_log_weight(2.0, 2.0), make_power_log_log_weight(2.0, 0.0, 1.0)}) {
    const GammaEstimate est = gamma(w);
    CHECK_FALSE(est.diverged);
    CHECK(est.value > 1.0);
    CHECK(std::isfinite(est.value));
  }
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "weaknorm/norms.hpp"
#include "weaknorm/random_functions.hpp"
#include "weaknorm/sharpness.hpp"

using namespace weaknorm;

namespace {

StepFunction three_piece() { return StepFunction({{3.0, 0.2}, {1.0, 0.5}, {2.0, 0.3}}); }

StepFunction f_kappa_sample(double kappa, int n) {
  return sample_analytic([kappa](double x) { return 1.0 - std::pow(x, kappa); }, n);
}

// Marcinkiewicz norm for w_p by calculus. On a piece [a, b] of the profile,
// t^{1/p} f**(t) = (c - v a) t^{1/p - 1} + v t^{1/p}, whose only stationary
// point is t = (p - 1)(c - v a) / v. Pieces are rebuilt from the raw
// function, and t > mass is dominated because t^{1/p - 1} decreases.
double power_marcinkiewicz_by_calculus(const StepFunction& f, double p) {
  std::vector<Piece> pieces(f.pieces().begin(), f.pieces().end());
  std::sort(pieces.begin(), pieces.end(), [](auto& x, auto& y) { return x.value > y.value; });
  auto F = [p](double t, double c, double v, double a) {
    return std::pow(t, 1.0 / p) * (c + v * (t - a)) / t;
  };
  double best = 0.0;
  double a = 0.0;
  double c = 0.0;
  for (const auto& piece : pieces) {
    const double b = a + piece.mass;
    const double v = piece.value;
    best = std::max(best, F(b, c, v, a));
    if (v > 0.0) {
      const double t_star = (p - 1.0) * (c - v * a) / v;
      if (t_star > a && t_star < b) best = std::max(best, F(t_star, c, v, a));
    }
    c += v * piece.mass;
    a = b;
  }
  return best;
}

// sup_t w(t) f*(t) approached from the left end of each constant stretch.
double weak_by_left_limits(const StepFunction& f, const Weight& w) {
  const DecreasingProfile g = rearrange(f);
  double best = 0.0;
  for (std::size_t i = 0; i < g.segments().size(); ++i) {
    const double b = g.segment_end(i);
    best = std::max(best, g.segments()[i].value * w(b * (1.0 - 1e-13)));
  }
  return best;
}

}  // namespace

TEST_CASE("weak_norm examples") {
  const Weight w2 = make_power_weight(2.0);
  const SupResult weak = weak_norm(rearrange(three_piece()), w2);
  CHECK(weak.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(weak.argmax == doctest::Approx(0.5));
  CHECK(weak_norm(rearrange(StepFunction({{2.5, 1.0}})), w2).value == 2.5);
  const double g1 = closed_form_GHK_power(2.0, 1.0).G;
  CHECK(std::fabs(weak_norm(rearrange(f_kappa_sample(1.0, 4096)), w2).value - g1) < 1e-3);
  CHECK_THROWS_AS(weak_norm(rearrange(three_piece()),
                            make_power_log_weight(2.0, 1.0, Admissibility::allow_kink)),
                  std::invalid_argument);
}

TEST_CASE("marcinkiewicz_norm examples") {
  const Weight w2 = make_power_weight(2.0);
  const MarcinkiewiczResult marc = marcinkiewicz_norm(rearrange(three_piece()), w2);
  CHECK(marc.value == doctest::Approx(1.7).epsilon(1e-12));
  CHECK(marc.argmax_t == doctest::Approx(1.0));
  CHECK_FALSE(marc.tail_warning);
  CHECK(power_marcinkiewicz_by_calculus(three_piece(), 2.0) == doctest::Approx(1.7).epsilon(1e-15));
  CHECK(marcinkiewicz_norm(rearrange(StepFunction({{2.5, 1.0}})), w2).value ==
        doctest::Approx(2.5).epsilon(1e-12));
  const double h1 = closed_form_GHK_power(2.0, 1.0).H;
  CHECK(std::fabs(marcinkiewicz_norm(rearrange(f_kappa_sample(1.0, 4096)), w2).value - h1) < 1e-3);
}

TEST_CASE("greedy_subset_norm examples") {
  const Weight w2 = make_power_weight(2.0);
  CHECK(std::fabs(greedy_subset_norm(three_piece(), w2) - 1.7) < 1e-6);
  CHECK(greedy_subset_norm(StepFunction({{2.5, 1.0}}), w2) == doctest::Approx(2.5).epsilon(1e-12));
  const double h1 = closed_form_GHK_power(2.0, 1.0).H;
  CHECK(std::fabs(greedy_subset_norm(f_kappa_sample(1.0, 4096), w2) - h1) < 1e-3);
}

TEST_CASE("subset lower bounds") {
  const Weight w2 = make_power_weight(2.0);
  const StepFunction f = three_piece();
  // Only the whole space: w(1) * int |f|.
  CHECK(random_subset_lower_bound(f, w2, 1, 3) == doctest::Approx(1.7).epsilon(1e-15));
  CHECK(exhaustive_subset_sup(f, w2) == doctest::Approx(1.7).epsilon(1e-15));
  // E = {value 3}: sqrt(0.2) * 3 / 0.2 * 0.2.
  CHECK(subset_objective(f, w2, 0b001) == doctest::Approx(3.0 * std::sqrt(0.2)));
  CHECK_THROWS_AS(random_subset_lower_bound(f, w2, 0, 1), std::invalid_argument);

  const StepFunction distinct({{1.0, 0.05}, {4.0, 0.15}, {2.0, 0.1}, {0.5, 0.3}, {3.0, 0.4}});
  const double marc = marcinkiewicz_norm(rearrange(distinct), w2).value;
  CHECK(exhaustive_subset_sup(distinct, w2) <= marc + 1e-9);
  CHECK(random_subset_lower_bound(distinct, w2, 500, 42) <= marc + 1e-9);
  CHECK(random_subset_lower_bound(distinct, w2, 500, 42) ==
        random_subset_lower_bound(distinct, w2, 500, 42));
}

TEST_CASE("verify_bilateral examples") {
  const Weight w2 = make_power_weight(2.0);
  const GammaEstimate g2 = gamma(w2);
  const NormReport r = verify_bilateral(three_piece(), w2, g2);
  CHECK(r.ratio == doctest::Approx(1.7 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.lower_ok);
  CHECK(r.upper_ok);
  CHECK(r.gamma_value == doctest::Approx(2.0).epsilon(1e-8));

  const NormReport constant = verify_bilateral(StepFunction({{0.7, 1.0}}), w2, g2);
  CHECK(constant.ratio == doctest::Approx(1.0).epsilon(1e-12));

  const NormReport extremal = verify_bilateral(f_kappa_sample(100.0, 4096), w2, g2);
  CHECK(std::fabs(extremal.ratio - closed_form_GHK_power(2.0, 100.0).K) < 1e-3);
  CHECK(extremal.lower_ok);
  CHECK(extremal.upper_ok);

  const NormReport zero = verify_bilateral(StepFunction({{0.0, 1.0}}), w2, g2);
  CHECK(zero.weak_norm == 0.0);
  CHECK(zero.marcinkiewicz_norm == 0.0);
  CHECK(zero.ratio == 1.0);
  CHECK(zero.lower_ok);
  CHECK(zero.upper_ok);
}

TEST_CASE("tail beyond the total mass warns when w(t)/t grows") {
  const Weight square = Weight::custom([](double s) { return s * s; }, "s^2");
  const MarcinkiewiczResult marc = marcinkiewicz_norm(rearrange(three_piece()), square);
  CHECK(marc.tail_warning);
  CHECK(marc.value > 1.7);
  CHECK(marc.argmax_t > 1.0);
}

TEST_CASE("bilateral inequality and oracles on seeded random functions") {
  std::mt19937_64 rng(99);
  for (double p : {1.5, 2.0, 4.0}) {
    const Weight w = make_power_weight(p);
    const GammaEstimate est = gamma(w);
    for (int trial = 0; trial < 300; ++trial) {
      CAPTURE(p);
      CAPTURE(trial);
      const StepFunction f = random_step_function(rng);
      const DecreasingProfile g = rearrange(f);
      const double weak = weak_norm(g, w).value;
      const double marc = marcinkiewicz_norm(g, w).value;
      REQUIRE(weak <= marc + kInequalitySlack);
      REQUIRE(marc <= est.value * weak + kInequalitySlack);
      REQUIRE(std::fabs(weak - weak_by_left_limits(f, w)) <= 1e-9 * std::max(1.0, weak));
      REQUIRE(std::fabs(marc - power_marcinkiewicz_by_calculus(f, p)) <= 1e-9 * std::max(1.0, marc));
      REQUIRE(std::fabs(greedy_subset_norm(f, w) - marc) <= 1e-6);
      if (f.size() <= 12) REQUIRE(exhaustive_subset_sup(f, w) <= marc + kInequalitySlack);
      REQUIRE(random_subset_lower_bound(f, w, 50, static_cast<std::uint64_t>(trial)) <=
              marc + kInequalitySlack);
    }
  }
}

TEST_CASE("norms are homogeneous and monotone in the values") {
  std::mt19937_64 rng(1234);
  const Weight w = make_power_log_weight(2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const StepFunction f = random_step_function(rng);
    const DecreasingProfile g = rearrange(f);
    const double weak = weak_norm(g, w).value;
    const double marc = marcinkiewicz_norm(g, w).value;
    const double c = 0.1 + 10.0 * uniform01(rng);
    const DecreasingProfile gc = rearrange(f.scaled(c));
    CHECK(weak_norm(gc, w).value == doctest::Approx(c * weak).epsilon(1e-12));
    CHECK(marcinkiewicz_norm(gc, w).value == doctest::Approx(c * marc).epsilon(1e-12));

    std::vector<Piece> bumped(f.pieces().begin(), f.pieces().end());
    bumped[rng() % bumped.size()].value += 1.0 + uniform01(rng);
    const DecreasingProfile gb = rearrange(StepFunction(bumped));
    CHECK(weak_norm(gb, w).value >= weak - 1e-12);
    CHECK(marcinkiewicz_norm(gb, w).value >= marc - 1e-12);
  }
}

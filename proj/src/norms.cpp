#include "weaknorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "weaknorm/exact_sum.hpp"

namespace weaknorm {

namespace {

void require_monotone(const Weight& w, const char* who) {
  if (!w.monotone()) {
    throw std::invalid_argument(std::string(who) + ": weight '" + w.spec() +
                                "' is not non-decreasing");
  }
}

double subset_objective_impl(const StepFunction& f, const Weight& w,
                             const std::vector<char>& chosen) {
  ExactSum mass;
  ExactSum integral;
  const auto pieces = f.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!chosen[i]) continue;
    mass.add(pieces[i].mass);
    integral.add(pieces[i].value * pieces[i].mass);
  }
  const double m = mass.value();
  if (!(m > 0.0)) return 0.0;
  return w(m) / m * integral.value();
}

}  // namespace

SupResult weak_norm(const DecreasingProfile& g, const Weight& w) {
  require_monotone(w, "weak_norm");
  SupResult best{0.0, g.segment_end(0)};
  const auto segments = g.segments();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const double right = g.segment_end(i);
    const double v = segments[i].value * w(right);
    if (v > best.value) best = {v, right};
  }
  return best;
}

MarcinkiewiczResult marcinkiewicz_norm(const DecreasingProfile& g, const Weight& w,
                                       const MarcinkiewiczGrid& grid) {
  if (grid.points_per_piece < 2) {
    throw std::invalid_argument("marcinkiewicz_norm: need at least 2 points per piece");
  }
  MarcinkiewiczResult result;
  const auto segments = g.segments();
  const auto n = static_cast<std::size_t>(grid.points_per_piece);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const double a = segments[i].t_start;
    const double b = g.segment_end(i);
    const double c = g.prefix_integral(i);
    const double v = segments[i].value;
    // w(t) f**(t) on the piece; f** is affine in t over t.
    auto objective = [&](double t) { return w(t) * (c + v * (t - a)) / t; };
    const double lo = a > 0.0 ? a : b * 1e-9;
    const SupResult piece = grid_then_golden(objective, log_grid(lo, b, n), grid.t_tolerance);
    if (piece.value > result.value) {
      result.value = piece.value;
      result.argmax_t = piece.argmax;
    }
  }

  // t > total_mass: f**(t) = M / t with M the total integral. If w(t)/t keeps
  // decreasing the tail never beats t = total_mass, which is already covered.
  const double total_mass = g.total_mass();
  const double total = g.total_integral();
  double previous_ratio = w(total_mass) / total_mass;
  double t = total_mass;
  for (int k = 0; k < grid.tail_samples; ++k) {
    t *= 2.0;
    const double ratio = w(t) / t;
    if (ratio > previous_ratio * (1.0 + 1e-12)) result.tail_warning = true;
    previous_ratio = ratio;
    if (result.tail_warning && ratio * total > result.value) {
      result.value = ratio * total;
      result.argmax_t = t;
    }
  }
  return result;
}

double greedy_subset_norm(const StepFunction& f, const Weight& w, const GreedyGrid& grid) {
  if (grid.points < 2) throw std::invalid_argument("greedy_subset_norm: need at least 2 points");
  std::vector<Piece> pieces(f.pieces().begin(), f.pieces().end());
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.value > b.value; });

  // Cumulative mass and integral of the largest-first filling order.
  std::vector<double> filled_mass(pieces.size() + 1, 0.0);
  std::vector<double> filled_integral(pieces.size() + 1, 0.0);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    filled_mass[i + 1] = filled_mass[i] + pieces[i].mass;
    filled_integral[i + 1] = filled_integral[i] + pieces[i].value * pieces[i].mass;
  }
  const double total_mass = filled_mass.back();

  // sup over mu(E) <= t of int_E |f|: whole pieces while they fit, then a
  // fractional share of the next one.
  auto best_subset_integral = [&](double t) {
    if (t >= total_mass) return filled_integral.back();
    const auto it = std::upper_bound(filled_mass.begin(), filled_mass.end(), t);
    const auto whole = static_cast<std::size_t>(it - filled_mass.begin()) - 1;
    return filled_integral[whole] + pieces[whole].value * (t - filled_mass[whole]);
  };
  auto objective = [&](double t) { return w(t) / t * best_subset_integral(t); };

  std::vector<double> ts = log_grid(total_mass * 1e-9, total_mass,
                                    static_cast<std::size_t>(grid.points));
  ts.insert(ts.end(), filled_mass.begin() + 1, filled_mass.end());
  double t = total_mass;
  for (int k = 0; k < 64; ++k) ts.push_back(t *= 2.0);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return grid_then_golden(objective, ts, grid.t_tolerance).value;
}

double subset_objective(const StepFunction& f, const Weight& w, std::uint64_t mask) {
  if (f.size() > 64) throw std::invalid_argument("subset_objective: more than 64 pieces");
  std::vector<char> chosen(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) chosen[i] = static_cast<char>((mask >> i) & 1U);
  return subset_objective_impl(f, w, chosen);
}

double random_subset_lower_bound(const StepFunction& f, const Weight& w, int trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("random_subset_lower_bound: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<char> chosen(f.size(), 1);
  // First trial: the whole space.
  double best = subset_objective_impl(f, w, chosen);
  for (int trial = 1; trial < trials; ++trial) {
    bool any = false;
    for (auto& c : chosen) {
      c = static_cast<char>(rng() >> 63);
      any = any || c;
    }
    if (!any) chosen[rng() % chosen.size()] = 1;
    best = std::max(best, subset_objective_impl(f, w, chosen));
  }
  return best;
}

double exhaustive_subset_sup(const StepFunction& f, const Weight& w) {
  if (f.size() > 24) throw std::invalid_argument("exhaustive_subset_sup: at most 24 pieces");
  const std::uint64_t count = std::uint64_t{1} << f.size();
  double best = 0.0;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    best = std::max(best, subset_objective(f, w, mask));
  }
  return best;
}

NormReport verify_bilateral(const StepFunction& f, const Weight& w) {
  return verify_bilateral(f, w, gamma(w));
}

NormReport verify_bilateral(const StepFunction& f, const Weight& w, const GammaEstimate& gamma) {
  const DecreasingProfile g = rearrange(f);
  const SupResult weak = weak_norm(g, w);
  const MarcinkiewiczResult marc = marcinkiewicz_norm(g, w);

  NormReport report;
  report.weak_norm = weak.value;
  report.marcinkiewicz_norm = marc.value;
  report.argmax_t_weak = weak.argmax;
  report.argmax_t_marc = marc.argmax_t;
  report.tail_warning = marc.tail_warning;
  report.gamma_value = gamma.value;
  report.gamma_diverged = gamma.diverged;
  // 0 <= 0 <= 0 for the zero function; ratio 1 by convention.
  report.ratio = weak.value > 0.0 ? marc.value / weak.value : 1.0;
  report.lower_ok = weak.value <= marc.value + kInequalitySlack;
  // With gamma infinite the upper bound holds trivially but says nothing.
  report.upper_ok =
      gamma.diverged || marc.value <= gamma.value * weak.value + kInequalitySlack;
  return report;
}

}  // namespace weaknorm

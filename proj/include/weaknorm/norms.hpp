#pragma once

// Weak (Lorentz) quasi-norm and Marcinkiewicz norm with a general weight:
//
//   ||f||*_w = sup_t w(t) f*(t),     ||f||_w = sup_t w(t) f**(t),
//
// and the bilateral inequality ||f||*_w <= ||f||_w <= gamma(w) ||f||*_w.

#include <cstdint>
#include <string>

#include "weaknorm/rearrangement.hpp"
#include "weaknorm/search.hpp"
#include "weaknorm/weights.hpp"

namespace weaknorm {

inline constexpr double kInequalitySlack = 1e-9;

struct MarcinkiewiczGrid {
  int points_per_piece = 64;
  double t_tolerance = 1e-10;
  int tail_samples = 64;  // geometric sample of t > total_mass, ratio 2
};

struct MarcinkiewiczResult {
  double value = 0.0;
  double argmax_t = 0.0;
  /// w(t)/t was not non-increasing beyond the total mass; the tail term
  /// was taken from the sample and may be under-estimated.
  bool tail_warning = false;
};

struct NormReport {
  double weak_norm = 0.0;
  double marcinkiewicz_norm = 0.0;
  double gamma_value = 0.0;
  double ratio = 0.0;
  bool lower_ok = false;
  bool upper_ok = false;
  double argmax_t_weak = 0.0;
  double argmax_t_marc = 0.0;
  bool gamma_diverged = false;
  bool tail_warning = false;
};

/// sup over pieces of value_i * w(right end of piece i); the sup over a
/// half-open piece of a continuous non-decreasing w.
SupResult weak_norm(const DecreasingProfile& g, const Weight& w);

MarcinkiewiczResult marcinkiewicz_norm(const DecreasingProfile& g, const Weight& w,
                                       const MarcinkiewiczGrid& grid = {});

struct GreedyGrid {
  int points = 4096;
  double t_tolerance = 1e-12;
};

/// Oracle for the Marcinkiewicz norm through subsets: for each t the best
/// set of measure t is filled greedily with the largest values (fractional
/// last piece allowed), working from the raw pieces rather than a profile.
double greedy_subset_norm(const StepFunction& f, const Weight& w, const GreedyGrid& grid = {});

/// Objective of the subset formulation for a union of whole pieces.
double subset_objective(const StepFunction& f, const Weight& w, std::uint64_t mask);

/// Max of subset_objective over `trials` random non-empty unions of pieces.
double random_subset_lower_bound(const StepFunction& f, const Weight& w, int trials,
                                 std::uint64_t seed);

/// Max of subset_objective over all 2^n - 1 non-empty unions (n <= 24).
double exhaustive_subset_sup(const StepFunction& f, const Weight& w);

/// Both norms, gamma(w) and the two inequality verdicts.
NormReport verify_bilateral(const StepFunction& f, const Weight& w);
NormReport verify_bilateral(const StepFunction& f, const Weight& w, const GammaEstimate& gamma);

}  // namespace weaknorm

#pragma once

// Simple functions on a non-atomic finite measure space, their tail
// functions and decreasing rearrangements.
//
//   T_f(t)   = mu{x : |f(x)| >= t}
//   f*(t)    = inf{s : mu{|f| > s} <= t}
//   f**(t)   = t^{-1} int_0^t f*(s) ds

#include <functional>
#include <span>
#include <vector>

namespace weaknorm {

struct Piece {
  double value = 0.0;
  double mass = 0.0;
};

/// Non-negative simple function stored as (value, mass) pieces. Values are
/// stored as |value|; masses must be finite and strictly positive.
class StepFunction {
 public:
  explicit StepFunction(std::vector<Piece> pieces);

  [[nodiscard]] std::span<const Piece> pieces() const { return pieces_; }
  [[nodiscard]] std::size_t size() const { return pieces_.size(); }
  [[nodiscard]] double total_mass() const { return total_mass_; }

  /// Sum of value * mass, i.e. int |f| dmu.
  [[nodiscard]] double integral() const;

  [[nodiscard]] StepFunction scaled(double c) const;

  /// Masses divided by the total so that total_mass() == 1 (up to rounding).
  [[nodiscard]] StepFunction normalized() const;

 private:
  std::vector<Piece> pieces_;
  double total_mass_ = 0.0;
};

/// Right-continuous non-increasing step function on [0, total_mass).
class DecreasingProfile {
 public:
  struct Segment {
    double t_start = 0.0;
    double value = 0.0;
  };

  [[nodiscard]] std::span<const Segment> segments() const { return segments_; }
  [[nodiscard]] double total_mass() const { return total_mass_; }
  [[nodiscard]] double total_integral() const { return prefix_.back(); }

  /// Right end of segment i (the next t_start, or total_mass).
  [[nodiscard]] double segment_end(std::size_t i) const;

  /// int_0^{t_start(i)} f*(s) ds; index size() gives the total integral.
  [[nodiscard]] double prefix_integral(std::size_t i) const { return prefix_[i]; }

  /// Index of the segment containing t in [0, total_mass).
  [[nodiscard]] std::size_t segment_index(double t) const;

  friend bool operator==(const DecreasingProfile& a, const DecreasingProfile& b);

 private:
  friend DecreasingProfile rearrange(const StepFunction& f);
  DecreasingProfile() = default;

  std::vector<Segment> segments_;
  std::vector<double> prefix_;
  double total_mass_ = 0.0;
};

inline bool operator==(const DecreasingProfile::Segment& a, const DecreasingProfile::Segment& b) {
  return a.t_start == b.t_start && a.value == b.value;
}

/// T_f(t) = mu{|f| >= t}. Requires t >= 0.
double tail_function(const StepFunction& f, double t);

/// Tail function of the profile, read off the breakpoints.
double tail_function(const DecreasingProfile& g, double t);

DecreasingProfile rearrange(const StepFunction& f);

/// f**(t); for t beyond the total mass the integrand vanishes.
double double_star(const DecreasingProfile& g, double t);

/// f*(t), right-continuous; 0 for t >= total_mass.
double profile_value(const DecreasingProfile& g, double t);

/// n pieces of mass 1/n, valued h at the cell midpoints of [0, 1].
StepFunction sample_analytic(const std::function<double(double)>& h, int n);

}  // namespace weaknorm

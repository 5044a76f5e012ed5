#include "weaknorm/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "weaknorm/exact_sum.hpp"

namespace weaknorm {

StepFunction::StepFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("StepFunction: no pieces");
  ExactSum mass;
  for (Piece& piece : pieces_) {
    if (!std::isfinite(piece.value)) {
      throw std::invalid_argument("StepFunction: non-finite value");
    }
    if (!std::isfinite(piece.mass) || !(piece.mass > 0.0)) {
      throw std::invalid_argument("StepFunction: masses must be finite and > 0");
    }
    piece.value = std::fabs(piece.value);
    mass.add(piece.mass);
  }
  total_mass_ = mass.value();
}

double StepFunction::integral() const {
  ExactSum acc;
  for (const Piece& piece : pieces_) acc.add(piece.value * piece.mass);
  return acc.value();
}

StepFunction StepFunction::scaled(double c) const {
  if (!std::isfinite(c)) throw std::invalid_argument("StepFunction::scaled: non-finite factor");
  std::vector<Piece> out(pieces_.begin(), pieces_.end());
  for (Piece& piece : out) piece.value *= c;
  return StepFunction(std::move(out));
}

StepFunction StepFunction::normalized() const {
  std::vector<Piece> out(pieces_.begin(), pieces_.end());
  for (Piece& piece : out) piece.mass /= total_mass_;
  return StepFunction(std::move(out));
}

double DecreasingProfile::segment_end(std::size_t i) const {
  return i + 1 < segments_.size() ? segments_[i + 1].t_start : total_mass_;
}

std::size_t DecreasingProfile::segment_index(double t) const {
  const auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                                   [](double x, const Segment& s) { return x < s.t_start; });
  return it == segments_.begin() ? 0 : static_cast<std::size_t>(it - segments_.begin()) - 1;
}

bool operator==(const DecreasingProfile& a, const DecreasingProfile& b) {
  return a.total_mass_ == b.total_mass_ && a.segments_ == b.segments_;
}

double tail_function(const StepFunction& f, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("tail_function: t must be >= 0");
  ExactSum mass;
  for (const Piece& piece : f.pieces()) {
    if (piece.value >= t) mass.add(piece.mass);
  }
  return mass.value();
}

double tail_function(const DecreasingProfile& g, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("tail_function: t must be >= 0");
  // First segment whose value drops below t starts exactly where {f >= t} ends.
  for (const auto& segment : g.segments()) {
    if (segment.value < t) return segment.t_start;
  }
  return g.total_mass();
}

DecreasingProfile rearrange(const StepFunction& f) {
  std::vector<Piece> sorted(f.pieces().begin(), f.pieces().end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Piece& a, const Piece& b) { return a.value > b.value; });

  DecreasingProfile g;
  ExactSum cumulative_mass;
  ExactSum cumulative_integral;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double value = sorted[i].value;
    g.segments_.push_back({cumulative_mass.value(), value});
    g.prefix_.push_back(cumulative_integral.value());
    ExactSum merged;
    for (; i < sorted.size() && sorted[i].value == value; ++i) {
      cumulative_mass.add(sorted[i].mass);
      merged.add(sorted[i].mass);
    }
    cumulative_integral.add(value * merged.value());
  }
  g.total_mass_ = cumulative_mass.value();
  g.prefix_.push_back(cumulative_integral.value());
  return g;
}

double double_star(const DecreasingProfile& g, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("double_star: t must be > 0");
  if (t >= g.total_mass()) return g.total_integral() / t;
  const std::size_t i = g.segment_index(t);
  const auto& segment = g.segments()[i];
  return (g.prefix_integral(i) + segment.value * (t - segment.t_start)) / t;
}

double profile_value(const DecreasingProfile& g, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("profile_value: t must be > 0");
  if (t >= g.total_mass()) return 0.0;
  return g.segments()[g.segment_index(t)].value;
}

StepFunction sample_analytic(const std::function<double(double)>& h, int n) {
  if (n < 1) throw std::invalid_argument("sample_analytic: n must be >= 1");
  std::vector<Piece> pieces;
  pieces.reserve(static_cast<std::size_t>(n));
  const double mass = 1.0 / n;
  for (int k = 0; k < n; ++k) {
    const double x = (k + 0.5) / n;
    const double v = h(x);
    if (!(v >= 0.0)) {
      throw std::invalid_argument("sample_analytic: negative or NaN sample at x=" +
                                  std::to_string(x));
    }
    pieces.push_back({v, mass});
  }
  return StepFunction(std::move(pieces));
}

}  // namespace weaknorm

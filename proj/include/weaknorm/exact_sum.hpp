#pragma once

#include <span>
#include <vector>

namespace weaknorm {

/// Correctly rounded floating-point summation (Shewchuk partials, as in
/// Python's math.fsum). The rounded result depends only on the multiset of
/// addends, never on their order, which is what makes tail functions of a
/// function and of its rearrangement compare equal bit for bit.
class ExactSum {
 public:
  void add(double x);
  [[nodiscard]] double value() const;

 private:
  std::vector<double> partials_;
};

double exact_sum(std::span<const double> values);

}  // namespace weaknorm

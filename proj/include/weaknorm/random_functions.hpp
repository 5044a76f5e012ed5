#pragma once

#include <cstdint>
#include <random>

#include "weaknorm/rearrangement.hpp"

namespace weaknorm {

/// Uniform double in [0, 1) from the top 53 bits; identical across standard
/// libraries, unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Between 1 and max_pieces pieces, values uniform in [0, max_value], masses
/// uniform in (0, 1] then normalized to a probability measure.
StepFunction random_step_function(std::mt19937_64& rng, int max_pieces = 50,
                                  double max_value = 10.0);

}  // namespace weaknorm

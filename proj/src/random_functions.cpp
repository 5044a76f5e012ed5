#include "weaknorm/random_functions.hpp"

#include <stdexcept>
#include <vector>

namespace weaknorm {

StepFunction random_step_function(std::mt19937_64& rng, int max_pieces, double max_value) {
  if (max_pieces < 1) throw std::invalid_argument("random_step_function: max_pieces must be >= 1");
  const auto n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_pieces));
  std::vector<Piece> pieces(static_cast<std::size_t>(n));
  for (Piece& piece : pieces) {
    piece.value = max_value * uniform01(rng);
    piece.mass = 1.0 - uniform01(rng);
  }
  return StepFunction(std::move(pieces)).normalized();
}

}  // namespace weaknorm

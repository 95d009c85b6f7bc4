#pragma once

#include <cstdint>
#include <utility>

#include "edist/sequence.hpp"

namespace edist {

// Synthetic pair: A is uniform over the alphabet, B is A with k edits drawn
// uniformly over {insert, delete, substitute} at uniform positions. Edits
// may cancel, so the true distance is at most k. Deterministic per seed.
struct GenSpec {
  std::size_t n = 0;
  std::size_t k = 0;
  uint32_t sigma = 256;  // in [2, 256]
  uint64_t seed = 1;
};

std::pair<Sequence, Sequence> generate_edits(const GenSpec& spec);

}  // namespace edist

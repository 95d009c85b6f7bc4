#pragma once

#include <cstdint>

namespace edist {

// Unreachable-distance sentinel, absorbing under saturating addition and
// far enough from the overflow edge that sums of two sentinels stay valid.
constexpr int64_t kInfCost = INT64_MAX / 4;

inline int64_t sat_add(int64_t a, int64_t b) {
  int64_t s = a + b;
  return s >= kInfCost ? kInfCost : s;
}

}  // namespace edist

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edist/saturating.hpp"
#include "edist/sequence.hpp"

namespace edist {

// Reference implementations for differential testing plus the
// output-insensitive anti-diagonal baseline. Deliberately unoptimized and
// single-algorithm-path, except for the anti-diagonal wave parallelism.

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DPTable {
  std::size_t rows = 0, cols = 0;  // n+1 by m+1
  std::vector<uint32_t> d;

  uint32_t at(std::size_t i, std::size_t j) const { return d[i * cols + j]; }
};

struct DpOptions {
  uint64_t cell_cap = 100'000'000;  // refuse n*m beyond this
  bool keep_table = false;
};

struct DpResult {
  uint64_t k = 0;
  std::optional<DPTable> table;
};

DpResult dp_edit_distance(const Sequence& a, const Sequence& b,
                          const DpOptions& opt = {});

// Same recurrence, processed wave by wave (all cells with equal i+j), three
// rolling waves. The parallel output-insensitive baseline.
uint64_t antidiagonal_edit_distance(const Sequence& a, const Sequence& b,
                                    const DpOptions& opt = {});

// DP with cells |i-j| > t forced unreachable; kInfCost when no band path
// reaches the corner. Oracle for the stripe-restricted check.
int64_t banded_dp(const Sequence& a, const Sequence& b, uint64_t t);

// Character-by-character scan; 1-based positions, one past the end allowed.
uint64_t lcp_naive(const Sequence& a, const Sequence& b, uint64_t x, uint64_t y);

struct CostMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<int64_t> v;

  CostMatrix() = default;
  CostMatrix(std::size_t r, std::size_t c, int64_t fill = kInfCost)
      : rows(r), cols(c), v(r * c, fill) {}
  int64_t& at(std::size_t i, std::size_t j) { return v[i * cols + j]; }
  int64_t at(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
};

// Brute-force min-plus product over the full shared dimension; the combine
// oracle. Throws std::invalid_argument on dimension mismatch.
CostMatrix minplus_boundary(const CostMatrix& d1, const CostMatrix& d2);

}  // namespace edist

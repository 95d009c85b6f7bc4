#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edist/sequence.hpp"

namespace edist {

// Suffix array over codes >= 1 (DC3 / skew, linear work). Start positions
// are 0-based. Throws std::invalid_argument if a code 0 appears: 0 is the
// reserved concatenation sentinel and is inserted by build_sa_index only.
std::vector<uint32_t> build_suffix_array(std::span<const uint32_t> s);

// lcp[i] = LCP length of suffixes sa[i-1] and sa[i]; lcp[0] = 0 (Kasai).
std::vector<uint32_t> build_lcp_array(std::span<const uint32_t> s,
                                      const std::vector<uint32_t>& sa,
                                      const std::vector<uint32_t>& rank);

// Doubling sparse table; query(i, j) = min(v[i+1..j]) for i < j, O(1).
struct RmqSparseTable {
  std::vector<std::vector<uint32_t>> levels;

  uint32_t query(std::size_t i, std::size_t j) const;
};

RmqSparseTable build_rmq(const std::vector<uint32_t>& v);

// SA + LCP + RMQ over C = A . 0 . B, answering LCP(A[x..], B[y..]) in O(1)
// after construction. The single sentinel keeps matches from spanning the
// A/B boundary. Mismatches within the first `fast_path` characters return
// without touching the rank/RMQ structures.
struct SuffixArrayIndex {
  std::size_t n = 0, m = 0;
  std::vector<uint32_t> concat;  // codes shifted +1; sentinel becomes 1
  std::vector<uint32_t> sa, rank, lcp;
  RmqSparseTable rmq;
  uint32_t fast_path = 8;
};

SuffixArrayIndex build_sa_index(const Sequence& a, const Sequence& b,
                                uint32_t fast_path = 8);

// 1-based positions; x = n+1 or y = m+1 yields 0.
uint64_t lcp_sa(const SuffixArrayIndex& idx, uint64_t x, uint64_t y);

}  // namespace edist

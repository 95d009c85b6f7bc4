#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <vector>

#include "edist/sequence.hpp"

namespace edist {

// Polynomial fingerprints h(A[l..r]) = sum A[i] * p^(r-i) mod q with
// q = 2^61 - 1. Two fingerprinted substrings combine in O(1):
//   concat:        h([S1,S2]) = h(S1) * p^|S2| + h(S2)
//   remove prefix: h(S2)      = h([S1,S2]) - p^|S2| * h(S1)
// which makes prefix tables a plain scan under the concat operation.

constexpr uint64_t kHashModulus = (uint64_t(1) << 61) - 1;

uint64_t mul_mod(uint64_t a, uint64_t b);

inline uint64_t add_mod(uint64_t a, uint64_t b) {
  uint64_t s = a + b;
  if (s >= kHashModulus) s -= kHashModulus;
  return s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b) {
  return a >= b ? a - b : a + kHashModulus - b;
}

struct HashValue {
  uint64_t value = 0;   // in [0, q)
  uint64_t length = 0;  // element count fingerprinted; 0 implies value 0

  bool operator==(const HashValue&) const = default;
};

// Base p plus p^(2^i) for power lookups. Powers of arbitrary lengths are
// assembled from the doubling table in O(log length), so no length-sized
// power array is kept (it would defeat the O(n/b) space of blocked tables).
struct HashParams {
  uint64_t base = 0;
  std::array<uint64_t, 62> pow2{};

  uint64_t pow(uint64_t len) const;
};

struct HashConfig {
  uint64_t seed = 0x9e3779b97f4a7c15ull;
  bool double_hash = false;  // second independent base, both must match
};

// One or two independently drawn bases over the shared Mersenne modulus.
struct HashFamily {
  HashParams h1;
  HashParams h2;
  bool dual = false;
};

// Draws base(s) uniformly from [sigma+1, q) with a seeded generator.
HashFamily make_hash_family(uint32_t sigma, const HashConfig& cfg = {});

// Params over an explicitly chosen base (tests, fixed fixtures).
HashParams make_hash_params(uint64_t base);

HashValue hash_char(uint32_t code, const HashParams& params);
HashValue hash_concat(HashValue h1, HashValue h2, const HashParams& params);
HashValue hash_remove_prefix(HashValue h12, HashValue h1, const HashParams& params);

// entries[x] = h(A[1..x]) for every prefix; entries[0] = 0.
struct PrefixHashTable {
  std::vector<uint64_t> e1, e2;

  std::size_t aux_words() const { return e1.size() + e2.size(); }
};

// entries[j] = h(A[1..j*b]) for whole blocks only; the trailing partial
// block is reconstructed on the fly by get_hash.
struct BlockedHashTable {
  uint64_t block = 1;
  std::vector<uint64_t> e1, e2;

  std::size_t aux_words() const { return e1.size() + e2.size(); }
};

PrefixHashTable build_prefix_table(const Sequence& a, const HashFamily& f);
BlockedHashTable build_blocked_table(const Sequence& a, uint64_t block,
                                     const HashFamily& f);

// h(A[1..x]) from whichever table is at hand. The blocked variant pays at
// most block-1 per-character concat steps past the nearest stored prefix.
HashValue get_hash(const Sequence& a, const PrefixHashTable& t,
                   const HashParams& params, uint64_t x, int which = 1);
HashValue get_hash(const Sequence& a, const BlockedHashTable& t,
                   const HashParams& params, uint64_t x, int which = 1);

// Fingerprint of the length-l substring A[x..x+l), 1-based x.
template <class Table>
HashValue range_hash(const Sequence& a, const Table& t, const HashParams& params,
                     uint64_t x, uint64_t l, int which = 1) {
  if (l == 0) return HashValue{};
  HashValue whole = get_hash(a, t, params, x + l - 1, which);
  HashValue head = get_hash(a, t, params, x - 1, which);
  return hash_remove_prefix(whole, head, params);
}

// Counts fingerprint comparisons (Compare calls) issued by lcp queries.
struct LcpQueryCounter {
  std::atomic<uint64_t> compares{0};
};

// Longest common prefix of A[x..] and B[y..] by exponential search on the
// length followed by binary search, comparing range fingerprints. Positions
// are 1-based; x = |A|+1 or y = |B|+1 yields 0.
template <class Table>
uint64_t lcp_hash(const Sequence& a, const Sequence& b, const Table& ta,
                  const Table& tb, const HashFamily& f, uint64_t x, uint64_t y,
                  LcpQueryCounter* counter = nullptr);

extern template uint64_t lcp_hash<PrefixHashTable>(
    const Sequence&, const Sequence&, const PrefixHashTable&,
    const PrefixHashTable&, const HashFamily&, uint64_t, uint64_t,
    LcpQueryCounter*);
extern template uint64_t lcp_hash<BlockedHashTable>(
    const Sequence&, const Sequence&, const BlockedHashTable&,
    const BlockedHashTable&, const HashFamily&, uint64_t, uint64_t,
    LcpQueryCounter*);

}  // namespace edist

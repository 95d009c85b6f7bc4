#pragma once

#include <cstdint>

#include "edist/hashing.hpp"
#include "edist/oracle.hpp"
#include "edist/sequence.hpp"
#include "edist/suffix_array.hpp"

namespace edist {

// The three LCP oracles behind one shape: construct over a pair, then
// lcp(x, y) with 1-based positions, safe for concurrent queries.

class NaiveLcp {
 public:
  NaiveLcp(const Sequence& a, const Sequence& b) : a_(a), b_(b) {}
  uint64_t operator()(uint64_t x, uint64_t y) const {
    return lcp_naive(a_, b_, x, y);
  }

 private:
  const Sequence& a_;
  const Sequence& b_;
};

class SaLcp {
 public:
  SaLcp(const Sequence& a, const Sequence& b, uint32_t fast_path = 8)
      : idx_(build_sa_index(a, b, fast_path)) {}
  uint64_t operator()(uint64_t x, uint64_t y) const { return lcp_sa(idx_, x, y); }

 private:
  SuffixArrayIndex idx_;
};

class PrefixHashLcp {
 public:
  PrefixHashLcp(const Sequence& a, const Sequence& b, const HashConfig& cfg = {})
      : a_(a),
        b_(b),
        family_(make_hash_family(std::max(a.sigma, b.sigma), cfg)),
        ta_(build_prefix_table(a, family_)),
        tb_(build_prefix_table(b, family_)) {}

  uint64_t operator()(uint64_t x, uint64_t y) const {
    return lcp_hash(a_, b_, ta_, tb_, family_, x, y, &counter_);
  }

  std::size_t aux_words() const { return ta_.aux_words() + tb_.aux_words(); }
  uint64_t compares() const { return counter_.compares.load(); }

 private:
  const Sequence& a_;
  const Sequence& b_;
  HashFamily family_;
  PrefixHashTable ta_, tb_;
  mutable LcpQueryCounter counter_;
};

class BlockedHashLcp {
 public:
  BlockedHashLcp(const Sequence& a, const Sequence& b, uint64_t block = 32,
                 const HashConfig& cfg = {})
      : a_(a),
        b_(b),
        family_(make_hash_family(std::max(a.sigma, b.sigma), cfg)),
        ta_(build_blocked_table(a, block, family_)),
        tb_(build_blocked_table(b, block, family_)) {}

  uint64_t operator()(uint64_t x, uint64_t y) const {
    return lcp_hash(a_, b_, ta_, tb_, family_, x, y, &counter_);
  }

  std::size_t aux_words() const { return ta_.aux_words() + tb_.aux_words(); }
  uint64_t compares() const { return counter_.compares.load(); }

 private:
  const Sequence& a_;
  const Sequence& b_;
  HashFamily family_;
  BlockedHashTable ta_, tb_;
  mutable LcpQueryCounter counter_;
};

}  // namespace edist

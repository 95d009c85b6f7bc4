#include "edist/hashing.hpp"

#include <cassert>
#include <random>

#include "edist/parallel.hpp"

namespace edist {

uint64_t mul_mod(uint64_t a, uint64_t b) {
  __uint128_t z = static_cast<__uint128_t>(a) * b;
  uint64_t s = static_cast<uint64_t>(z & kHashModulus) +
               static_cast<uint64_t>(z >> 61);
  s = (s & kHashModulus) + (s >> 61);
  if (s >= kHashModulus) s -= kHashModulus;
  return s;
}

uint64_t HashParams::pow(uint64_t len) const {
  uint64_t r = 1;
  for (int i = 0; len != 0; i++, len >>= 1)
    if (len & 1) r = mul_mod(r, pow2[static_cast<std::size_t>(i)]);
  return r;
}

HashParams make_hash_params(uint64_t base) {
  HashParams p;
  p.base = base % kHashModulus;
  uint64_t v = p.base;
  for (auto& e : p.pow2) {
    e = v;
    v = mul_mod(v, v);
  }
  return p;
}

HashFamily make_hash_family(uint32_t sigma, const HashConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  auto draw = [&]() {
    // Uniform in [sigma+1, q); the modulo bias over a 61-bit range is
    // negligible and keeps the draw identical on every platform.
    uint64_t span = kHashModulus - (sigma + 1);
    return sigma + 1 + rng() % span;
  };
  HashFamily f;
  f.h1 = make_hash_params(draw());
  f.h2 = make_hash_params(draw());
  f.dual = cfg.double_hash;
  return f;
}

HashValue hash_char(uint32_t code, const HashParams&) {
  return HashValue{code % kHashModulus, 1};
}

HashValue hash_concat(HashValue h1, HashValue h2, const HashParams& params) {
  return HashValue{add_mod(mul_mod(h1.value, params.pow(h2.length)), h2.value),
                   h1.length + h2.length};
}

HashValue hash_remove_prefix(HashValue h12, HashValue h1,
                             const HashParams& params) {
  assert(h1.length <= h12.length);
  uint64_t l2 = h12.length - h1.length;
  return HashValue{sub_mod(h12.value, mul_mod(params.pow(l2), h1.value)), l2};
}

namespace {

constexpr std::size_t kScanChunk = 8192;

// Fold of h over codes [lo, hi), starting from `seed`.
uint64_t fold_range(const std::vector<uint32_t>& codes, std::size_t lo,
                    std::size_t hi, uint64_t seed, uint64_t base) {
  uint64_t h = seed;
  for (std::size_t i = lo; i < hi; i++)
    h = add_mod(mul_mod(h, base), codes[i] % kHashModulus);
  return h;
}

// entries[x] = h(A[1..x]) via a two-pass chunked scan. Chunking is fixed,
// not thread-count dependent, and the concat operation is exactly
// associative in Z_q, so the result is bit-identical for any schedule.
void fill_prefix_entries(const std::vector<uint32_t>& codes,
                         const HashParams& p, std::vector<uint64_t>& out) {
  std::size_t n = codes.size();
  out.assign(n + 1, 0);
  std::size_t chunks = (n + kScanChunk - 1) / kScanChunk;
  std::vector<uint64_t> head(chunks + 1, 0);
  parallel_for(0, chunks, [&](std::size_t c) {
    head[c + 1] = fold_range(codes, c * kScanChunk,
                             std::min(n, (c + 1) * kScanChunk), 0, p.base);
  });
  uint64_t pc = p.pow(std::min(n, kScanChunk));
  for (std::size_t c = 1; c <= chunks; c++) {
    uint64_t shift = c == chunks ? p.pow(n - (c - 1) * kScanChunk) : pc;
    head[c] = add_mod(mul_mod(head[c - 1], shift), head[c]);
  }
  parallel_for(0, chunks, [&](std::size_t c) {
    uint64_t h = head[c];
    for (std::size_t i = c * kScanChunk; i < std::min(n, (c + 1) * kScanChunk);
         i++) {
      h = add_mod(mul_mod(h, p.base), codes[i] % kHashModulus);
      out[i + 1] = h;
    }
  });
}

void fill_blocked_entries(const std::vector<uint32_t>& codes, uint64_t block,
                          const HashParams& p, std::vector<uint64_t>& out) {
  std::size_t w = codes.size() / block;
  out.assign(w + 1, 0);
  parallel_for(0, w, [&](std::size_t j) {
    out[j + 1] = fold_range(codes, j * block, (j + 1) * block, 0, p.base);
  });
  // Scan over whole blocks; every block shifts by exactly p^block.
  uint64_t pb = p.pow(block);
  std::size_t chunks = (w + kScanChunk - 1) / kScanChunk;
  std::vector<uint64_t> head(chunks + 1, 0);
  parallel_for(0, chunks, [&](std::size_t c) {
    uint64_t h = 0;
    std::size_t hi = std::min(w, (c + 1) * kScanChunk);
    for (std::size_t j = c * kScanChunk; j < hi; j++)
      h = add_mod(mul_mod(h, pb), out[j + 1]);
    head[c + 1] = h;
  });
  uint64_t full_shift = p.pow(block * std::min(w, kScanChunk));
  for (std::size_t c = 1; c <= chunks; c++) {
    uint64_t shift =
        c == chunks ? p.pow(block * (w - (c - 1) * kScanChunk)) : full_shift;
    head[c] = add_mod(mul_mod(head[c - 1], shift), head[c]);
  }
  parallel_for(0, chunks, [&](std::size_t c) {
    uint64_t h = head[c];
    std::size_t hi = std::min(w, (c + 1) * kScanChunk);
    for (std::size_t j = c * kScanChunk; j < hi; j++) {
      h = add_mod(mul_mod(h, pb), out[j + 1]);
      out[j + 1] = h;
    }
  });
}

}  // namespace

PrefixHashTable build_prefix_table(const Sequence& a, const HashFamily& f) {
  PrefixHashTable t;
  fill_prefix_entries(a.codes, f.h1, t.e1);
  if (f.dual) fill_prefix_entries(a.codes, f.h2, t.e2);
  return t;
}

BlockedHashTable build_blocked_table(const Sequence& a, uint64_t block,
                                     const HashFamily& f) {
  assert(block >= 1);
  BlockedHashTable t;
  t.block = block;
  fill_blocked_entries(a.codes, block, f.h1, t.e1);
  if (f.dual) fill_blocked_entries(a.codes, block, f.h2, t.e2);
  return t;
}

HashValue get_hash(const Sequence&, const PrefixHashTable& t,
                   const HashParams&, uint64_t x, int which) {
  return HashValue{(which == 1 ? t.e1 : t.e2)[x], x};
}

HashValue get_hash(const Sequence& a, const BlockedHashTable& t,
                   const HashParams& params, uint64_t x, int which) {
  if (x == 0) return HashValue{};
  uint64_t r = x / t.block;
  uint64_t h = (which == 1 ? t.e1 : t.e2)[r];
  for (uint64_t i = r * t.block + 1; i <= x; i++)
    h = add_mod(mul_mod(h, params.base), a.at1(i) % kHashModulus);
  return HashValue{h, x};
}

namespace {

template <class Table>
bool ranges_equal(const Sequence& a, const Sequence& b, const Table& ta,
                  const Table& tb, const HashFamily& f, uint64_t x, uint64_t y,
                  uint64_t l, LcpQueryCounter* counter) {
  if (counter) counter->compares.fetch_add(1, std::memory_order_relaxed);
  if (range_hash(a, ta, f.h1, x, l, 1) != range_hash(b, tb, f.h1, y, l, 1))
    return false;
  if (!f.dual) return true;
  return range_hash(a, ta, f.h2, x, l, 2) == range_hash(b, tb, f.h2, y, l, 2);
}

}  // namespace

template <class Table>
uint64_t lcp_hash(const Sequence& a, const Sequence& b, const Table& ta,
                  const Table& tb, const HashFamily& f, uint64_t x, uint64_t y,
                  LcpQueryCounter* counter) {
  uint64_t avail_a = a.size() + 1 - x;
  uint64_t avail_b = b.size() + 1 - y;
  uint64_t max_l = std::min(avail_a, avail_b);
  if (max_l == 0) return 0;
  if (!ranges_equal(a, b, ta, tb, f, x, y, 1, counter)) return 0;
  // Exponential phase: grow the matched length 1, 2, 4, ... until a chunk
  // differs or the shorter string runs out.
  uint64_t lo = 1;       // known equal
  uint64_t hi = max_l + 1;  // known unequal (or one past available)
  for (uint64_t len = 2; len <= max_l; len *= 2) {
    if (ranges_equal(a, b, ta, tb, f, x, y, len, counter)) {
      lo = len;
    } else {
      hi = len;
      break;
    }
  }
  while (lo + 1 < hi) {
    uint64_t mid = lo + (hi - lo) / 2;
    if (ranges_equal(a, b, ta, tb, f, x, y, mid, counter))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

template uint64_t lcp_hash<PrefixHashTable>(const Sequence&, const Sequence&,
                                            const PrefixHashTable&,
                                            const PrefixHashTable&,
                                            const HashFamily&, uint64_t,
                                            uint64_t, LcpQueryCounter*);
template uint64_t lcp_hash<BlockedHashTable>(const Sequence&, const Sequence&,
                                             const BlockedHashTable&,
                                             const BlockedHashTable&,
                                             const HashFamily&, uint64_t,
                                             uint64_t, LcpQueryCounter*);

}  // namespace edist

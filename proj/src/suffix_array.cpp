#include "edist/suffix_array.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include "edist/parallel.hpp"

namespace edist {

namespace {

// Stable sort of indices a[0..n) by key[a[i]], keys in [0, key_bound].
// Small inputs use one counting pass; larger ones use LSD byte radix with
// fixed-size per-chunk histograms so the scatter order (and the output) is
// identical for every worker count.
class RadixSorter {
 public:
  void sort(const uint32_t* a, uint32_t* b, const uint32_t* key, std::size_t n,
            uint32_t key_bound) {
    if (n <= (1u << 15) || key_bound < 256) {
      counting_pass(a, b, n, [&](uint32_t v) { return key[v]; }, key_bound);
      return;
    }
    int passes = (std::bit_width(key_bound) + 7) / 8;
    tmp_.resize(n);
    const uint32_t* src = a;
    uint32_t* dst = passes % 2 == 1 ? b : tmp_.data();
    uint32_t* other = passes % 2 == 1 ? tmp_.data() : b;
    for (int pass = 0; pass < passes; pass++) {
      byte_pass(src, dst, key, n, 8 * pass);
      src = dst;
      std::swap(dst, other);
    }
  }

 private:
  template <typename KeyFn>
  void counting_pass(const uint32_t* a, uint32_t* b, std::size_t n, KeyFn k,
                     uint32_t key_bound) {
    counts_.assign(static_cast<std::size_t>(key_bound) + 1, 0);
    for (std::size_t i = 0; i < n; i++) counts_[k(a[i])]++;
    uint32_t sum = 0;
    for (auto& c : counts_) {
      uint32_t t = c;
      c = sum;
      sum += t;
    }
    for (std::size_t i = 0; i < n; i++) b[counts_[k(a[i])]++] = a[i];
  }

  void byte_pass(const uint32_t* a, uint32_t* b, const uint32_t* key,
                 std::size_t n, int shift) {
    constexpr std::size_t kChunk = 1 << 16;
    std::size_t chunks = (n + kChunk - 1) / kChunk;
    hist_.assign(chunks * 256, 0);
    parallel_for(
        0, chunks,
        [&](std::size_t c) {
          uint32_t* h = hist_.data() + c * 256;
          std::size_t hi = std::min(n, (c + 1) * kChunk);
          for (std::size_t i = c * kChunk; i < hi; i++)
            h[(key[a[i]] >> shift) & 255]++;
        },
        1);
    // Digit-major exclusive offsets: all chunks of digit d before digit d+1.
    uint64_t sum = 0;
    for (int d = 0; d < 256; d++) {
      for (std::size_t c = 0; c < chunks; c++) {
        uint64_t t = hist_[c * 256 + d];
        hist_[c * 256 + d] = static_cast<uint32_t>(sum);
        sum += t;
      }
    }
    parallel_for(
        0, chunks,
        [&](std::size_t c) {
          uint32_t* h = hist_.data() + c * 256;
          std::size_t hi = std::min(n, (c + 1) * kChunk);
          for (std::size_t i = c * kChunk; i < hi; i++)
            b[h[(key[a[i]] >> shift) & 255]++] = a[i];
        },
        1);
  }

  std::vector<uint32_t> counts_;
  std::vector<uint32_t> hist_;
  std::vector<uint32_t> tmp_;
};

bool leq2(uint32_t a1, uint32_t a2, uint32_t b1, uint32_t b2) {
  return a1 < b1 || (a1 == b1 && a2 <= b2);
}
bool leq3(uint32_t a1, uint32_t a2, uint32_t a3, uint32_t b1, uint32_t b2,
          uint32_t b3) {
  return a1 < b1 || (a1 == b1 && leq2(a2, a3, b2, b3));
}

// DC3 / skew (Karkkainen-Sanders). s must carry three trailing 0 pads and
// codes in [1, key_bound] elsewhere.
void skew(const std::vector<uint32_t>& s, std::vector<uint32_t>& sa,
          std::size_t n, uint32_t key_bound, RadixSorter& sorter) {
  std::size_t n0 = (n + 2) / 3, n1 = (n + 1) / 3, n2 = n / 3, n02 = n0 + n2;
  std::vector<uint32_t> s12(n02 + 3, 0), sa12(n02 + 3, 0);
  // Positions i mod 3 != 0; a dummy mod-1 position pads when n % 3 == 1 so
  // the two halves line up.
  for (std::size_t i = 0, j = 0; i < n + (n0 - n1); i++)
    if (i % 3 != 0) s12[j++] = static_cast<uint32_t>(i);
  sorter.sort(s12.data(), sa12.data(), s.data() + 2, n02, key_bound);
  sorter.sort(sa12.data(), s12.data(), s.data() + 1, n02, key_bound);
  sorter.sort(s12.data(), sa12.data(), s.data(), n02, key_bound);

  uint32_t name = 0;
  uint32_t c0 = UINT32_MAX, c1 = UINT32_MAX, c2 = UINT32_MAX;
  for (std::size_t i = 0; i < n02; i++) {
    uint32_t p = sa12[i];
    if (s[p] != c0 || s[p + 1] != c1 || s[p + 2] != c2) {
      name++;
      c0 = s[p];
      c1 = s[p + 1];
      c2 = s[p + 2];
    }
    if (p % 3 == 1)
      s12[p / 3] = name;
    else
      s12[p / 3 + n0] = name;
  }

  if (name < n02) {
    skew(s12, sa12, n02, name, sorter);
    for (std::size_t i = 0; i < n02; i++) s12[sa12[i]] = static_cast<uint32_t>(i + 1);
  } else {
    for (std::size_t i = 0; i < n02; i++) sa12[s12[i] - 1] = static_cast<uint32_t>(i);
  }

  std::vector<uint32_t> s0(n0), sa0(n0);
  for (std::size_t i = 0, j = 0; i < n02; i++)
    if (sa12[i] < n0) s0[j++] = 3 * sa12[i];
  sorter.sort(s0.data(), sa0.data(), s.data(), n0, key_bound);

  auto pos12 = [&](std::size_t t) {
    return sa12[t] < n0 ? sa12[t] * 3 + 1 : (sa12[t] - n0) * 3 + 2;
  };
  for (std::size_t p = 0, t = n0 - n1, k = 0; k < n; k++) {
    std::size_t i = pos12(t);
    std::size_t j = sa0[p];
    bool take12 =
        sa12[t] < n0
            ? leq2(s[i], s12[sa12[t] + n0], s[j], s12[j / 3])
            : leq3(s[i], s[i + 1], s12[sa12[t] - n0 + 1], s[j], s[j + 1],
                   s12[j / 3 + n0]);
    if (take12) {
      sa[k] = static_cast<uint32_t>(i);
      t++;
      if (t == n02)
        for (k++; p < n0; p++, k++) sa[k] = sa0[p];
    } else {
      sa[k] = static_cast<uint32_t>(j);
      p++;
      if (p == n0)
        for (k++; t < n02; t++, k++) sa[k] = static_cast<uint32_t>(pos12(t));
    }
  }
}

std::vector<uint32_t> suffix_array_core(std::span<const uint32_t> s,
                                        uint32_t key_bound) {
  std::size_t n = s.size();
  if (n == 0) return {};
  if (n == 1) return {0};
  std::vector<uint32_t> padded(n + 3, 0);
  std::copy(s.begin(), s.end(), padded.begin());
  std::vector<uint32_t> sa(n);
  RadixSorter sorter;
  skew(padded, sa, n, key_bound, sorter);
  return sa;
}

}  // namespace

std::vector<uint32_t> build_suffix_array(std::span<const uint32_t> s) {
  std::size_t zeros = 0;
  uint32_t maxc = 1;
  for (uint32_t c : s) {
    if (c == 0) zeros++;
    maxc = std::max(maxc, c);
  }
  if (zeros > 1)
    throw std::invalid_argument(
        "code 0 is reserved for the single concatenation sentinel");
  // Shift by one so the (optional) sentinel stays above the DC3 pads.
  std::vector<uint32_t> shifted(s.size());
  parallel_for(0, s.size(), [&](std::size_t i) { shifted[i] = s[i] + 1; });
  return suffix_array_core(shifted, maxc + 1);
}

std::vector<uint32_t> build_lcp_array(std::span<const uint32_t> s,
                                      const std::vector<uint32_t>& sa,
                                      const std::vector<uint32_t>& rank) {
  std::size_t n = s.size();
  std::vector<uint32_t> lcp(n, 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; i++) {
    if (rank[i] == 0) {
      k = 0;
      continue;
    }
    std::size_t j = sa[rank[i] - 1];
    while (i + k < n && j + k < n && s[i + k] == s[j + k]) k++;
    lcp[rank[i]] = static_cast<uint32_t>(k);
    if (k > 0) k--;
  }
  return lcp;
}

uint32_t RmqSparseTable::query(std::size_t i, std::size_t j) const {
  assert(i < j);
  std::size_t a = i + 1, len = j - a + 1;
  unsigned lvl = std::bit_width(len) - 1;
  return std::min(levels[lvl][a], levels[lvl][j + 1 - (std::size_t(1) << lvl)]);
}

RmqSparseTable build_rmq(const std::vector<uint32_t>& v) {
  RmqSparseTable t;
  t.levels.push_back(v);
  for (std::size_t w = 2; w <= v.size(); w *= 2) {
    const auto& prev = t.levels.back();
    std::vector<uint32_t> cur(v.size() - w + 1);
    parallel_for(0, cur.size(),
                 [&](std::size_t i) { cur[i] = std::min(prev[i], prev[i + w / 2]); });
    t.levels.push_back(std::move(cur));
  }
  return t;
}

SuffixArrayIndex build_sa_index(const Sequence& a, const Sequence& b,
                                uint32_t fast_path) {
  SuffixArrayIndex idx;
  idx.n = a.size();
  idx.m = b.size();
  idx.fast_path = fast_path;
  idx.concat.resize(idx.n + idx.m + 1);
  parallel_for(0, idx.n, [&](std::size_t i) { idx.concat[i] = a.codes[i] + 1; });
  idx.concat[idx.n] = 1;  // sentinel, unique minimum
  parallel_for(0, idx.m,
               [&](std::size_t i) { idx.concat[idx.n + 1 + i] = b.codes[i] + 1; });
  uint32_t maxc = 1;
  for (uint32_t c : idx.concat) maxc = std::max(maxc, c);
  idx.sa = suffix_array_core(idx.concat, maxc);
  idx.rank.resize(idx.sa.size());
  parallel_for(0, idx.sa.size(), [&](std::size_t i) { idx.rank[idx.sa[i]] = static_cast<uint32_t>(i); });
  idx.lcp = build_lcp_array(idx.concat, idx.sa, idx.rank);
  idx.rmq = build_rmq(idx.lcp);
  return idx;
}

uint64_t lcp_sa(const SuffixArrayIndex& idx, uint64_t x, uint64_t y) {
  if (x > idx.n || y > idx.m) return 0;
  // Mismatches are overwhelmingly near the front; check a few characters
  // before paying for the rank/RMQ lookups.
  uint64_t lim = std::min<uint64_t>({idx.fast_path, idx.n - x + 1, idx.m - y + 1});
  std::size_t pa = x - 1, pb = idx.n + y;
  for (uint64_t d = 0; d < lim; d++)
    if (idx.concat[pa + d] != idx.concat[pb + d]) return d;
  if (lim < idx.fast_path) return lim;  // ran out of one string, all equal
  std::size_t l = idx.rank[pa], r = idx.rank[pb];
  if (l > r) std::swap(l, r);
  return idx.rmq.query(l, r);
}

}  // namespace edist

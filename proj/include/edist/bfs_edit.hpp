#pragma once

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "edist/parallel.hpp"
#include "edist/sequence.hpp"

namespace edist {

// Landau-Vishkin frontier BFS over the implicit DP-DAG. Frontier t holds,
// per diagonal i = x - y, the last row reached with exactly t edits; each
// step extends by the LCP oracle and keeps the max row over the three
// predecessor moves. Only the previous and current frontiers are live.

struct BfsStats {
  uint64_t rounds = 0;
  uint64_t frontier_total = 0;   // diagonal entries processed, (k+1)^2 unclipped
  uint64_t lcp_queries = 0;
  uint64_t lcp_length_sum = 0;
};

struct BfsOptions {
  std::size_t parallel_grain = 512;  // below this frontier width, stay serial
};

namespace detail {
constexpr int64_t kUnreached = -1;
inline void noop_observer(uint64_t, const int64_t*, int64_t, int64_t) {}
}  // namespace detail

// lcp(x, y): 1-based LCP of A[x..] against B[y..]; a position one past the
// end yields 0. observer(t, rows, dlo, dhi) sees each finished frontier.
template <class LcpFn, class Observer>
std::pair<uint64_t, BfsStats> edit_distance_bfs_observed(const Sequence& a,
                                                         const Sequence& b,
                                                         LcpFn&& lcp,
                                                         const BfsOptions& opt,
                                                         Observer&& observer) {
  const bool swapped = a.size() < b.size();
  const Sequence& lng = swapped ? b : a;
  const Sequence& sht = swapped ? a : b;
  const int64_t n = static_cast<int64_t>(lng.size());
  const int64_t m = static_cast<int64_t>(sht.size());
  auto query = [&](int64_t x, int64_t y) -> uint64_t {
    return swapped ? lcp(static_cast<uint64_t>(y), static_cast<uint64_t>(x))
                   : lcp(static_cast<uint64_t>(x), static_cast<uint64_t>(y));
  };

  BfsStats stats;
  if (m == 0) return {static_cast<uint64_t>(n), stats};

  stats.frontier_total = 1;
  stats.lcp_queries = 1;
  int64_t f0 = static_cast<int64_t>(query(1, 1));
  stats.lcp_length_sum = static_cast<uint64_t>(f0);
  observer(0, &f0, 0, 0);
  if (n == m && f0 == n) return {0, stats};

  int64_t cap = 16;
  std::vector<int64_t> prev_buf(2 * cap + 1), cur_buf(2 * cap + 1);
  prev_buf[cap] = f0;
  int64_t prev_lo = 0, prev_hi = 0;

  std::atomic<uint64_t> queries{0}, len_sum{0};
  uint64_t t = 0;
  for (;;) {
    t++;
    assert(t <= static_cast<uint64_t>(n + 1));
    int64_t dlo = std::max(-static_cast<int64_t>(t), -m);
    int64_t dhi = std::min(static_cast<int64_t>(t), n);
    if (dhi > cap) {
      int64_t newcap = std::max(dhi, 2 * cap);
      std::vector<int64_t> np(2 * newcap + 1), nc(2 * newcap + 1);
      for (int64_t i = prev_lo; i <= prev_hi; i++)
        np[newcap + i] = prev_buf[cap + i];
      prev_buf = std::move(np);
      cur_buf = std::move(nc);
      cap = newcap;
    }
    int64_t* prev = prev_buf.data() + cap;
    int64_t* cur = cur_buf.data() + cap;

    parallel_for(
        0, static_cast<std::size_t>(dhi - dlo + 1),
        [&](std::size_t idx) {
          int64_t i = dlo + static_cast<int64_t>(idx);
          int64_t best = (i >= prev_lo && i <= prev_hi) ? prev[i]
                                                        : detail::kUnreached;
          uint64_t local_queries = 0, local_len = 0;
          constexpr int dxs[3] = {0, 1, 1};
          constexpr int dys[3] = {1, 0, 1};
          for (int mv = 0; mv < 3; mv++) {
            int64_t j = i - dxs[mv] + dys[mv];
            if (j < prev_lo || j > prev_hi) continue;
            int64_t px = prev[j];
            if (px == detail::kUnreached) continue;
            int64_t x = px + dxs[mv];
            int64_t y = x - i;
            if (x > n || y > m) continue;
            if (x < n && y < m) {
              uint64_t l = query(x + 1, y + 1);
              local_queries++;
              local_len += l;
              x += static_cast<int64_t>(l);
            }
            best = std::max(best, x);
          }
          if (local_queries) {
            queries.fetch_add(local_queries, std::memory_order_relaxed);
            len_sum.fetch_add(local_len, std::memory_order_relaxed);
          }
          cur[i] = best;
        },
        opt.parallel_grain);

    stats.rounds = t;
    stats.frontier_total += static_cast<uint64_t>(dhi - dlo + 1);
    observer(t, cur + dlo, dlo, dhi);
    if (n - m >= dlo && n - m <= dhi && cur[n - m] == n) break;
    std::swap(prev_buf, cur_buf);
    prev_lo = dlo;
    prev_hi = dhi;
  }
  stats.lcp_queries += queries.load();
  stats.lcp_length_sum += len_sum.load();
  return {t, stats};
}

template <class LcpFn>
std::pair<uint64_t, BfsStats> edit_distance_bfs(const Sequence& a,
                                                const Sequence& b, LcpFn&& lcp,
                                                const BfsOptions& opt = {}) {
  return edit_distance_bfs_observed(a, b, static_cast<LcpFn&&>(lcp), opt,
                                    detail::noop_observer);
}

}  // namespace edist

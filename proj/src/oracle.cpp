#include "edist/oracle.hpp"

#include <algorithm>
#include <string>

#include "edist/parallel.hpp"

namespace edist {

namespace {

void check_cap(std::size_t n, std::size_t m, uint64_t cap) {
  if (static_cast<uint64_t>(n) * m > cap)
    throw CapExceeded("dp table of " + std::to_string(n) + "x" +
                      std::to_string(m) + " cells exceeds the configured cap of " +
                      std::to_string(cap));
}

}  // namespace

DpResult dp_edit_distance(const Sequence& a, const Sequence& b,
                          const DpOptions& opt) {
  std::size_t n = a.size(), m = b.size();
  check_cap(n, m, opt.cell_cap);
  DpResult res;
  if (opt.keep_table) {
    DPTable t;
    t.rows = n + 1;
    t.cols = m + 1;
    t.d.resize(t.rows * t.cols);
    for (std::size_t j = 0; j <= m; j++) t.d[j] = static_cast<uint32_t>(j);
    for (std::size_t i = 1; i <= n; i++) {
      t.d[i * t.cols] = static_cast<uint32_t>(i);
      for (std::size_t j = 1; j <= m; j++) {
        uint32_t diag = t.at(i - 1, j - 1);
        uint32_t best;
        if (a.codes[i - 1] == b.codes[j - 1])
          best = diag;
        else
          best = 1 + std::min({diag, t.at(i - 1, j), t.at(i, j - 1)});
        t.d[i * t.cols + j] = best;
      }
    }
    res.k = t.at(n, m);
    res.table = std::move(t);
    return res;
  }
  std::vector<uint32_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; j++) prev[j] = static_cast<uint32_t>(j);
  for (std::size_t i = 1; i <= n; i++) {
    cur[0] = static_cast<uint32_t>(i);
    for (std::size_t j = 1; j <= m; j++) {
      if (a.codes[i - 1] == b.codes[j - 1])
        cur[j] = prev[j - 1];
      else
        cur[j] = 1 + std::min({prev[j - 1], prev[j], cur[j - 1]});
    }
    std::swap(prev, cur);
  }
  res.k = prev[m];
  return res;
}

uint64_t antidiagonal_edit_distance(const Sequence& a, const Sequence& b,
                                    const DpOptions& opt) {
  std::size_t n = a.size(), m = b.size();
  check_cap(n, m, opt.cell_cap);
  if (n == 0) return m;
  if (m == 0) return n;
  // b reversed so the wave loop reads both strings with unit stride.
  std::vector<uint32_t> brev(b.codes.rbegin(), b.codes.rend());
  std::vector<uint32_t> w0(n + 1), w1(n + 1), w2(n + 1);  // waves d-2, d-1, d
  w0[0] = 0;
  w1[0] = 1;
  w1[1] = 1;
  for (std::size_t d = 2; d <= n + m; d++) {
    std::size_t lo = d >= m ? d - m : 0;
    std::size_t hi = std::min(n, d);
    if (lo == 0) w2[0] = static_cast<uint32_t>(d);
    if (hi == d) w2[d] = static_cast<uint32_t>(d);
    std::size_t ilo = std::max<std::size_t>(lo, 1);
    std::size_t ihi = std::min(hi, d - 1);  // interior cells with j >= 1
    const uint32_t* ac = a.codes.data();
    const uint32_t* bc = brev.data();
    const uint32_t* up = w1.data();
    const uint32_t* dg = w0.data();
    uint32_t* cur = w2.data();
    parallel_for(
        ilo, ihi + 1,
        [&](std::size_t i) {
          // cell (i, d-i): diagonal from wave d-2 index i-1, up/left from
          // wave d-1 indices i-1 and i
          uint32_t sub = dg[i - 1] + (ac[i - 1] != bc[m - d + i]);
          uint32_t ins = std::min(up[i - 1], up[i]) + 1;
          cur[i] = std::min(sub, ins);
        },
        4096);
    std::swap(w0, w1);
    std::swap(w1, w2);
  }
  return w1[n];
}

int64_t banded_dp(const Sequence& a, const Sequence& b, uint64_t t) {
  std::size_t n = a.size(), m = b.size();
  auto in_band = [&](std::size_t i, std::size_t j) {
    return (i >= j ? i - j : j - i) <= t;
  };
  if (!in_band(n, m)) return kInfCost;
  std::vector<int64_t> prev(m + 1, kInfCost), cur(m + 1, kInfCost);
  for (std::size_t j = 0; j <= std::min<uint64_t>(m, t); j++)
    prev[j] = static_cast<int64_t>(j);
  for (std::size_t i = 1; i <= n; i++) {
    std::size_t jlo = i > t ? i - t : 0;
    std::size_t jhi = std::min<uint64_t>(m, i + t);
    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(jlo),
              cur.begin() + static_cast<std::ptrdiff_t>(jhi) + 1, kInfCost);
    if (jlo == 0) cur[0] = static_cast<int64_t>(i);
    for (std::size_t j = std::max<std::size_t>(jlo, 1); j <= jhi; j++) {
      int64_t up = in_band(i - 1, j) ? prev[j] : kInfCost;
      int64_t left = j > jlo ? cur[j - 1] : kInfCost;
      int64_t best;
      if (a.codes[i - 1] == b.codes[j - 1]) {
        best = prev[j - 1];
      } else {
        best = sat_add(std::min({prev[j - 1], up, left}), 1);
      }
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

uint64_t lcp_naive(const Sequence& a, const Sequence& b, uint64_t x, uint64_t y) {
  uint64_t l = 0;
  while (x + l <= a.size() && y + l <= b.size() &&
         a.codes[x + l - 1] == b.codes[y + l - 1])
    l++;
  return l;
}

CostMatrix minplus_boundary(const CostMatrix& d1, const CostMatrix& d2) {
  if (d1.cols != d2.rows)
    throw std::invalid_argument("minplus_boundary: shared boundary mismatch (" +
                                std::to_string(d1.cols) + " vs " +
                                std::to_string(d2.rows) + ")");
  CostMatrix out(d1.rows, d2.cols);
  for (std::size_t i = 0; i < d1.rows; i++)
    for (std::size_t j = 0; j < d2.cols; j++) {
      int64_t best = kInfCost;
      for (std::size_t l = 0; l < d1.cols; l++)
        best = std::min(best, sat_add(d1.at(i, l), d2.at(l, j)));
      out.at(i, j) = best;
    }
  return out;
}

}  // namespace edist

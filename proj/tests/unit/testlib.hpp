#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "edist/dacmm.hpp"
#include "edist/oracle.hpp"
#include "edist/saturating.hpp"
#include "edist/sequence.hpp"

namespace testlib {

inline uint64_t rand_below(std::mt19937_64& rng, uint64_t bound) {
  return rng() % bound;
}

inline edist::Sequence random_sequence(std::mt19937_64& rng, std::size_t n,
                                       uint32_t sigma) {
  std::vector<uint32_t> codes(n);
  for (auto& c : codes) c = static_cast<uint32_t>(1 + rand_below(rng, sigma));
  return edist::sequence_from_codes(std::move(codes), sigma);
}

// Independent suffix-array oracle: sort all suffixes with std::sort.
inline std::vector<uint32_t> sa_by_sorting(const std::vector<uint32_t>& s) {
  std::vector<uint32_t> sa(s.size());
  std::iota(sa.begin(), sa.end(), 0u);
  std::sort(sa.begin(), sa.end(), [&](uint32_t i, uint32_t j) {
    return std::lexicographical_compare(s.begin() + i, s.end(),
                                        s.begin() + j, s.end());
  });
  return sa;
}

inline std::vector<uint32_t> lcp_by_scanning(const std::vector<uint32_t>& s,
                                             const std::vector<uint32_t>& sa) {
  std::vector<uint32_t> lcp(s.size(), 0);
  for (std::size_t i = 1; i < sa.size(); i++) {
    std::size_t a = sa[i - 1], b = sa[i], l = 0;
    while (a + l < s.size() && b + l < s.size() && s[a + l] == s[b + l]) l++;
    lcp[i] = static_cast<uint32_t>(l);
  }
  return lcp;
}

// Independent all-pairs oracle for boundary SP matrices: Floyd-Warshall
// over every vertex of the (masked) region.
inline edist::CostMatrix region_sp_by_floyd_warshall(
    const edist::StripeRegion& reg, const edist::PathMask& mask,
    const edist::EdgeRule& rule) {
  int64_t R = reg.rows, C = reg.cols;
  int64_t nv = (R + 1) * (C + 1);
  auto vid = [&](int64_t x, int64_t y) {
    return (x - reg.x0) * (C + 1) + (y - reg.y0);
  };
  edist::CostMatrix d(static_cast<std::size_t>(nv),
                      static_cast<std::size_t>(nv));
  for (int64_t v = 0; v < nv; v++) d.at(v, v) = 0;
  for (int64_t x = reg.x0; x <= reg.x0 + R; x++) {
    for (int64_t y = reg.y0; y <= reg.y0 + C; y++) {
      if (!mask.contains({x, y})) continue;
      if (x > reg.x0 && mask.contains({x - 1, y}))
        d.at(vid(x - 1, y), vid(x, y)) = 1;
      if (y > reg.y0 && mask.contains({x, y - 1}))
        d.at(vid(x, y - 1), vid(x, y)) = 1;
      if (x > reg.x0 && y > reg.y0 && mask.contains({x - 1, y - 1}))
        d.at(vid(x - 1, y - 1), vid(x, y)) = rule.diag_weight(x, y);
    }
  }
  for (int64_t m = 0; m < nv; m++)
    for (int64_t i = 0; i < nv; i++)
      for (int64_t j = 0; j < nv; j++)
        d.at(i, j) = std::min(d.at(i, j),
                              edist::sat_add(d.at(i, m), d.at(m, j)));
  // Vertices off the mask are unreachable endpoints.
  for (int64_t x = reg.x0; x <= reg.x0 + R; x++)
    for (int64_t y = reg.y0; y <= reg.y0 + C; y++)
      if (!mask.contains({x, y}))
        for (int64_t v = 0; v < nv; v++) {
          if (v != vid(x, y)) {
            d.at(v, vid(x, y)) = edist::kInfCost;
            d.at(vid(x, y), v) = edist::kInfCost;
          }
        }
  return d;
}

}  // namespace testlib

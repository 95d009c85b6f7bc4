#pragma once

#include <atomic>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "edist/saturating.hpp"
#include "edist/sequence.hpp"

namespace edist {

// Output-sensitive divide-and-conquer edit distance: boundary-to-boundary
// shortest-path matrices over grid regions, combined along shared
// boundaries with Monge-bounded min-plus products, driven by prefix
// doubling on the stripe width.

struct Vertex {
  int64_t x = 0, y = 0;

  bool operator==(const Vertex&) const = default;
};

// A rectangle of cells [x0..x0+rows] x [y0..y0+cols] (vertex extents), with
// boundary walks clipped to the diagonal band lo <= (x-x0)-(y-y0) <= hi.
// Inputs walk the left edge bottom-to-top then the top edge left-to-right;
// outputs walk the bottom edge left-to-right then the right edge
// bottom-to-top. Both corners shared by two edges appear once.
//
// Invariants: rows, cols >= 0; lo <= 0 <= hi; lo <= rows-cols <= hi
// (both corners on the walk are band-feasible).
struct StripeRegion {
  int64_t x0 = 0, y0 = 0;
  int64_t rows = 0, cols = 0;
  int64_t lo = 0, hi = 0;

  bool feasible() const {
    return rows >= 0 && cols >= 0 && lo <= 0 && 0 <= hi && lo <= rows - cols &&
           rows - cols <= hi;
  }
  bool band_clips() const { return hi < rows || lo > -cols; }

  int64_t left_span() const { return std::min(rows, hi); }       // left edge
  int64_t top_span() const { return std::min(cols, -lo); }       // top edge
  int64_t bottom_start() const { return std::max<int64_t>(0, rows - hi); }
  int64_t right_start() const { return std::max<int64_t>(0, cols + lo); }

  int64_t num_inputs() const { return left_span() + top_span() + 1; }
  int64_t num_outputs() const {
    return (cols - bottom_start()) + (rows - right_start()) + 1;
  }

  Vertex input_vertex(int64_t p) const {
    int64_t lx = left_span();
    if (p <= lx) return {x0 + lx - p, y0};
    return {x0, y0 + (p - lx)};
  }
  Vertex output_vertex(int64_t q) const {
    int64_t bw = cols - bottom_start();
    if (q <= bw) return {x0 + rows, y0 + bottom_start() + q};
    return {x0 + rows - (q - bw), y0 + cols};
  }
  int64_t input_index(Vertex v) const {
    int64_t lx = left_span();
    if (v.y == y0 && v.x >= x0 && v.x <= x0 + lx) return lx - (v.x - x0);
    if (v.x == x0 && v.y > y0 && v.y <= y0 + top_span())
      return lx + (v.y - y0);
    return -1;
  }
  int64_t output_index(Vertex v) const {
    int64_t bw = cols - bottom_start();
    if (v.x == x0 + rows && v.y >= y0 + bottom_start() && v.y <= y0 + cols)
      return v.y - (y0 + bottom_start());
    if (v.y == y0 + cols && v.x >= x0 + right_start() && v.x < x0 + rows)
      return bw + (x0 + rows - v.x);
    return -1;
  }
};

// Diagonal band in global coordinates restricting which vertices paths may
// touch; the unlimited mask admits everything.
struct PathMask {
  int64_t dlo = -(int64_t(1) << 60);
  int64_t dhi = int64_t(1) << 60;

  bool contains(Vertex v) const {
    int64_t d = v.x - v.y;
    return dlo <= d && d <= dhi;
  }
  bool clips(const StripeRegion& r) const {
    int64_t base = r.x0 - r.y0;
    return dhi - base < r.rows || dlo - base > -r.cols;
  }
};

// Unit grid weights: horizontal and vertical edges cost 1; the diagonal
// edge into (x, y) costs 0 iff A[x] = B[y].
struct EdgeRule {
  const Sequence* a = nullptr;
  const Sequence* b = nullptr;

  int64_t diag_weight(int64_t x, int64_t y) const {
    return a->at1(static_cast<std::size_t>(x)) ==
                   b->at1(static_cast<std::size_t>(y))
               ? 0
               : 1;
  }
};

// Pairwise shortest distances from every input-walk vertex to every
// output-walk vertex of a region; kInfCost marks unreachable pairs.
// theta keeps the leftmost best-choice indices of the last combine's
// crossing block (transient, inspected by tests).
struct SPMatrix {
  StripeRegion reg;
  std::vector<int64_t> dist;

  std::vector<int32_t> theta;
  int64_t theta_rows = 0, theta_cols = 0;
  int64_t theta_row0 = 0;  // first crossing row in input order

  int64_t n_in() const { return reg.num_inputs(); }
  int64_t n_out() const { return reg.num_outputs(); }
  int64_t at(int64_t p, int64_t q) const {
    return dist[static_cast<std::size_t>(p * n_out() + q)];
  }
  int64_t corner_distance() const;  // top-left corner to bottom-right corner
};

enum class Stacking { kVertical, kHorizontal };

struct DacOptions {
  int64_t base_cutoff = 4;       // per-source DP below this edge length
  std::size_t parallel_grain = 64;
};

struct DacStats {
  uint64_t checks = 0;
  uint64_t combines = 0;
  uint64_t base_solves = 0;
  std::atomic<uint64_t> scanned_candidates{0};

  // Accumulates into plain counters so callers can copy the struct.
  uint64_t scanned() const { return scanned_candidates.load(); }
};

// Preallocated workspace shared by one combine call at a time.
struct CombineScratch {
  std::vector<int64_t> yt;      // transposed crossing columns of the b side
  std::vector<int32_t> alpha;   // per crossing row: first finite W index
  std::vector<int32_t> beta;    // per crossing column: last finite W index
  std::vector<int64_t> a_in, b_in, a_out, b_out;  // walk index maps
};

// Combines two SP matrices sharing a boundary (a above b, or a left of b).
// Non-crossing pairs are copied; crossing pairs take the min-plus product
// over the shared boundary, restricted to Monge argmin windows. Beyond the
// up-front buffer growth, the call performs no allocation.
// Throws std::invalid_argument when the pieces do not share a boundary
// segment of equal length.
void combine_into(const SPMatrix& da, const SPMatrix& db, Stacking st,
                  SPMatrix& out, CombineScratch& scratch,
                  const DacOptions& opt = {}, DacStats* stats = nullptr);
SPMatrix combine(const SPMatrix& da, const SPMatrix& db, Stacking st,
                 const DacOptions& opt = {}, DacStats* stats = nullptr);

// All-pairs boundary shortest paths for a region under a mask. Rectangles
// recurse into quadrants; band-clipped regions split into the two stripe
// halves plus the two off-diagonal triangles when they fit.
SPMatrix solve_boundary_sp(const StripeRegion& reg, const PathMask& mask,
                           const EdgeRule& rule, const DacOptions& opt = {},
                           DacStats* stats = nullptr);

// Rectangle entry point (no band anywhere).
SPMatrix rect_boundary_sp(const StripeRegion& rect, const EdgeRule& rule,
                          const DacOptions& opt = {}, DacStats* stats = nullptr);

// Corner-to-corner shortest distance over paths confined to |x-y| <= t,
// plus the full boundary matrix it came from.
std::pair<int64_t, SPMatrix> check_stripe(int64_t t, const EdgeRule& rule,
                                          const DacOptions& opt = {},
                                          DacStats* stats = nullptr);

struct DacResult {
  uint64_t k = 0;
  uint64_t checks = 0;
  uint64_t scanned = 0;
};

// Prefix-doubling driver: t = max(1, |n-m|), doubled until the banded
// answer certifies itself (sigma <= t).
DacResult edit_distance_dacmm(const Sequence& a, const Sequence& b,
                              const DacOptions& opt = {});

}  // namespace edist

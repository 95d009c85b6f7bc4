#include "edist/dacmm.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "edist/parallel.hpp"

namespace edist {

namespace {

PathMask mask_from_region(const StripeRegion& r) {
  int64_t base = r.x0 - r.y0;
  return PathMask{base + r.lo, base + r.hi};
}

// Extent union in Pa's frame; the band is the union of the two pieces'
// bands (identical bands for stripe splits, widening for rectangles).
StripeRegion union_region(const StripeRegion& a, const StripeRegion& b) {
  StripeRegion u;
  u.x0 = a.x0;
  u.y0 = a.y0;
  u.rows = std::max(a.x0 + a.rows, b.x0 + b.rows) - a.x0;
  u.cols = std::max(a.y0 + a.cols, b.y0 + b.cols) - a.y0;
  int64_t base = a.x0 - a.y0;
  PathMask ma = mask_from_region(a), mb = mask_from_region(b);
  u.lo = std::min(ma.dlo, mb.dlo) - base;
  u.hi = std::max(ma.dhi, mb.dhi) - base;
  return u;
}

struct SharedBoundary {
  int64_t len = 0;     // vertex count of W
  int64_t a_out0 = 0;  // W[l] = Da output index a_out0 + l
  int64_t b_in0 = 0;   // W[l] = Db input index b_in0 + l
};

[[noreturn]] void bad_boundary(const std::string& what) {
  throw std::invalid_argument("combine: " + what);
}

SharedBoundary shared_boundary(const StripeRegion& a, const StripeRegion& b,
                               Stacking st) {
  SharedBoundary w;
  if (st == Stacking::kVertical) {
    if (a.x0 + a.rows != b.x0) bad_boundary("pieces are not stacked");
    int64_t a_lo = a.y0 + a.bottom_start(), a_hi = a.y0 + a.cols;
    int64_t b_lo = b.y0, b_hi = b.y0 + b.top_span();
    if (a_lo != b_lo || a_hi != b_hi)
      bad_boundary("shared boundary segments differ (" +
                   std::to_string(a_hi - a_lo + 1) + " vs " +
                   std::to_string(b_hi - b_lo + 1) + " vertices)");
    w.len = a_hi - a_lo + 1;
    w.a_out0 = 0;                 // prefix of a's outputs (bottom edge)
    w.b_in0 = b.left_span();      // top-row segment of b's inputs
  } else {
    if (a.y0 + a.cols != b.y0) bad_boundary("pieces are not adjacent");
    int64_t a_lo = a.x0 + a.right_start(), a_hi = a.x0 + a.rows;
    int64_t b_lo = b.x0, b_hi = b.x0 + b.left_span();
    if (a_lo != b_lo || a_hi != b_hi)
      bad_boundary("shared boundary segments differ (" +
                   std::to_string(a_hi - a_lo + 1) + " vs " +
                   std::to_string(b_hi - b_lo + 1) + " vertices)");
    w.len = a_hi - a_lo + 1;
    w.a_out0 = a.cols - a.bottom_start();  // suffix: right edge bottom-to-top
    w.b_in0 = 0;                           // prefix: left edge bottom-to-top
  }
  return w;
}

}  // namespace

int64_t SPMatrix::corner_distance() const {
  int64_t p = reg.left_span();
  int64_t q = reg.cols - reg.bottom_start();
  return at(p, q);
}

// ---------------------------------------------------------------------------
// combine
// ---------------------------------------------------------------------------

namespace {

// One crossing entry: leftmost argmin of X[l] + Y[l] over [lo, hi].
struct PairResult {
  int64_t dist;
  int32_t theta;
};

inline PairResult scan_pair(const int64_t* xrow, const int64_t* yrow,
                            int64_t lo, int64_t hi, uint64_t& scanned) {
  int64_t best = kInfCost;
  int64_t arg = lo;
  for (int64_t l = lo; l <= hi; l++) {
    int64_t c = sat_add(xrow[l], yrow[l]);
    if (c < best) {
      best = c;
      arg = l;
    }
  }
  scanned += static_cast<uint64_t>(hi - lo + 1);
  return {best, static_cast<int32_t>(arg)};
}

}  // namespace

void combine_into(const SPMatrix& da, const SPMatrix& db, Stacking st,
                  SPMatrix& out, CombineScratch& scratch, const DacOptions& opt,
                  DacStats* stats) {
  const StripeRegion& ra = da.reg;
  const StripeRegion& rb = db.reg;
  SharedBoundary w = shared_boundary(ra, rb, st);
  const int64_t W = w.len;

  out.reg = union_region(ra, rb);
  if (!out.reg.feasible()) bad_boundary("union region is infeasible");
  const int64_t IN = out.reg.num_inputs();
  const int64_t OUT = out.reg.num_outputs();
  out.dist.resize(static_cast<std::size_t>(IN * OUT));

  scratch.a_in.resize(static_cast<std::size_t>(IN));
  scratch.b_in.resize(static_cast<std::size_t>(IN));
  scratch.a_out.resize(static_cast<std::size_t>(OUT));
  scratch.b_out.resize(static_cast<std::size_t>(OUT));
  for (int64_t p = 0; p < IN; p++) {
    Vertex v = out.reg.input_vertex(p);
    scratch.a_in[static_cast<std::size_t>(p)] = ra.input_index(v);
    scratch.b_in[static_cast<std::size_t>(p)] = rb.input_index(v);
  }
  for (int64_t q = 0; q < OUT; q++) {
    Vertex u = out.reg.output_vertex(q);
    scratch.a_out[static_cast<std::size_t>(q)] = ra.output_index(u);
    scratch.b_out[static_cast<std::size_t>(q)] = rb.output_index(u);
  }
  const int64_t* a_in = scratch.a_in.data();
  const int64_t* b_in = scratch.b_in.data();
  const int64_t* a_out = scratch.a_out.data();
  const int64_t* b_out = scratch.b_out.data();

  // Crossing rows: union inputs living only on the a side (a contiguous
  // suffix); crossing columns: union outputs only on the b side (a prefix).
  int64_t p0 = IN;
  for (int64_t p = 0; p < IN; p++) {
    if (a_in[p] >= 0 && b_in[p] < 0) {
      p0 = p;
      break;
    }
  }
  int64_t Rc = IN - p0;
  int64_t Qc = 0;
  while (Qc < OUT && b_out[Qc] >= 0 && a_out[Qc] < 0) Qc++;
#ifndef NDEBUG
  for (int64_t p = p0; p < IN; p++) assert(a_in[p] >= 0 && b_in[p] < 0);
#endif

  // Copy blocks and unreachable pairs.
  parallel_for(
      0, static_cast<std::size_t>(IN),
      [&](std::size_t pi) {
        int64_t p = static_cast<int64_t>(pi);
        int64_t* row = out.dist.data() + p * OUT;
        for (int64_t q = 0; q < OUT; q++) {
          if (a_in[p] >= 0 && a_out[q] >= 0)
            row[q] = da.at(a_in[p], a_out[q]);
          else if (b_in[p] >= 0 && b_out[q] >= 0)
            row[q] = db.at(b_in[p], b_out[q]);
          else if (!(p >= p0 && q < Qc))
            row[q] = kInfCost;
        }
      },
      opt.parallel_grain);

  out.theta_rows = Rc;
  out.theta_cols = Qc;
  out.theta_row0 = p0;
  out.theta.resize(static_cast<std::size_t>(Rc * Qc));
  if (Rc == 0 || Qc == 0) {
    if (stats) stats->combines++;
    return;
  }

  // Per-row and per-column finite windows on W. A row's reachable boundary
  // vertices form one contiguous run (dominance along a straight segment
  // intersected with the band), and likewise per column.
  scratch.alpha.resize(static_cast<std::size_t>(2 * Rc));
  scratch.beta.resize(static_cast<std::size_t>(2 * Qc));
  int32_t* row_first = scratch.alpha.data();
  int32_t* row_last = scratch.alpha.data() + Rc;
  int32_t* col_first = scratch.beta.data();
  int32_t* col_last = scratch.beta.data() + Qc;

  scratch.yt.resize(static_cast<std::size_t>(Qc * W));
  parallel_for(
      0, static_cast<std::size_t>(Qc),
      [&](std::size_t qi) {
        int64_t q = static_cast<int64_t>(qi);
        int64_t* yrow = scratch.yt.data() + q * W;
        int64_t f = -1, l = -1;
        for (int64_t wl = 0; wl < W; wl++) {
          int64_t v = db.at(w.b_in0 + wl, b_out[q]);
          yrow[wl] = v;
          if (v < kInfCost) {
            if (f < 0) f = wl;
            l = wl;
          }
        }
        col_first[q] = static_cast<int32_t>(f < 0 ? W : f);
        col_last[q] = static_cast<int32_t>(l);
      },
      opt.parallel_grain);
  parallel_for(
      0, static_cast<std::size_t>(Rc),
      [&](std::size_t ii) {
        int64_t i = static_cast<int64_t>(ii);
        const int64_t* xrow = da.dist.data() + a_in[p0 + i] * da.n_out() + w.a_out0;
        int64_t f = -1, l = -1;
        for (int64_t wl = 0; wl < W; wl++) {
          if (xrow[wl] < kInfCost) {
            if (f < 0) f = wl;
            l = wl;
          }
        }
        row_first[i] = static_cast<int32_t>(f < 0 ? W : f);
        row_last[i] = static_cast<int32_t>(l);
      },
      opt.parallel_grain);

  int64_t first_live_row = Rc, last_live_row = -1;
  for (int64_t i = 0; i < Rc; i++) {
    if (row_last[i] >= 0) {
      if (first_live_row == Rc) first_live_row = i;
      last_live_row = i;
    }
  }
  int64_t first_live_col = Qc;
  for (int64_t q = 0; q < Qc; q++) {
    if (col_last[q] >= 0) {
      first_live_col = q;
      break;
    }
  }

  auto xrow_of = [&](int64_t i) {
    return da.dist.data() + a_in[p0 + i] * da.n_out() + w.a_out0;
  };
  auto emit = [&](int64_t i, int64_t q, PairResult r) {
    out.dist[static_cast<std::size_t>((p0 + i) * OUT + q)] = r.dist;
    out.theta[static_cast<std::size_t>(i * Qc + q)] = r.theta;
  };
  auto theta_at = [&](int64_t i, int64_t q) {
    return static_cast<int64_t>(out.theta[static_cast<std::size_t>(i * Qc + q)]);
  };

  std::atomic<uint64_t> scanned_total{0};
  // Computes one pair given Monge bounds from already-settled neighbors.
  auto compute_pair = [&](int64_t i, int64_t q, int64_t lo, int64_t hi,
                          uint64_t& scanned) -> PairResult {
    if (row_last[i] < 0) {  // row off the band
      return {kInfCost, static_cast<int32_t>(i < first_live_row ? 0 : W - 1)};
    }
    if (col_last[q] < 0) {  // column off the band
      return {kInfCost, static_cast<int32_t>(q < first_live_col ? 0 : W - 1)};
    }
    int64_t rlo = std::max<int64_t>(lo, row_first[i]);
    int64_t rhi = std::min<int64_t>(hi, col_last[q]);
    rlo = std::max<int64_t>(rlo, col_first[q]);
    rhi = std::min<int64_t>(rhi, row_last[i]);
    if (rlo > rhi) {
      // Unreachable pair: pin theta to the finite window edge facing the
      // gap so neighbor bounds stay valid.
      int32_t rec = row_first[i] > col_last[q] ? row_first[i] : row_last[i];
      return {kInfCost, rec};
    }
    return scan_pair(xrow_of(i), scratch.yt.data() + q * W, rlo, rhi, scanned);
  };

  {
    uint64_t sc = 0;
    emit(0, 0, compute_pair(0, 0, 0, W - 1, sc));
    scanned_total.fetch_add(sc, std::memory_order_relaxed);
  }
  int64_t gamma = std::bit_width(static_cast<uint64_t>(std::max(Rc, Qc) - 1));
  for (int64_t e = gamma - 1; e >= 0; e--) {
    int64_t s = int64_t(1) << e;
    // (even, odd): row multiples of 2s, columns odd multiples of s.
    auto run_phase = [&](int64_t i_start, int64_t i_step, int64_t j_start,
                         int64_t j_step, bool row_bounds) {
      if (i_start >= Rc || j_start >= Qc) return;
      int64_t ni = (Rc - 1 - i_start) / i_step + 1;
      int64_t nj = (Qc - 1 - j_start) / j_step + 1;
      parallel_for(
          0, static_cast<std::size_t>(ni * nj),
          [&](std::size_t idx) {
            int64_t i = i_start + (static_cast<int64_t>(idx) / nj) * i_step;
            int64_t j = j_start + (static_cast<int64_t>(idx) % nj) * j_step;
            int64_t lo, hi;
            if (row_bounds) {
              lo = theta_at(i, j - s);
              hi = j + s < Qc ? theta_at(i, j + s) : W - 1;
            } else {
              lo = theta_at(i - s, j);
              hi = i + s < Rc ? theta_at(i + s, j) : W - 1;
            }
            uint64_t sc = 0;
            emit(i, j, compute_pair(i, j, lo, hi, sc));
            if (sc) scanned_total.fetch_add(sc, std::memory_order_relaxed);
          },
          opt.parallel_grain);
    };
    run_phase(0, 2 * s, s, 2 * s, /*row_bounds=*/true);   // (even, odd)
    run_phase(s, 2 * s, 0, 2 * s, /*row_bounds=*/false);  // (odd, even)
    run_phase(s, 2 * s, s, 2 * s, /*row_bounds=*/true);   // (odd, odd)
  }
  if (stats) {
    stats->combines++;
    stats->scanned_candidates.fetch_add(scanned_total.load(),
                                        std::memory_order_relaxed);
  }
}

SPMatrix combine(const SPMatrix& da, const SPMatrix& db, Stacking st,
                 const DacOptions& opt, DacStats* stats) {
  SPMatrix out;
  CombineScratch scratch;
  combine_into(da, db, st, out, scratch, opt, stats);
  return out;
}

// ---------------------------------------------------------------------------
// solver
// ---------------------------------------------------------------------------

namespace {

// Per-source DP over the region, band-masked. O(inputs * area).
SPMatrix base_dp(const StripeRegion& reg, const PathMask& mask,
                 const EdgeRule& rule, const DacOptions& opt,
                 DacStats* stats) {
  SPMatrix out;
  out.reg = reg;
  const int64_t IN = reg.num_inputs();
  const int64_t OUT = reg.num_outputs();
  out.dist.assign(static_cast<std::size_t>(IN * OUT), kInfCost);
  const int64_t R = reg.rows, C = reg.cols;
  const int64_t stride = C + 1;
  parallel_for(
      0, static_cast<std::size_t>(IN),
      [&](std::size_t pi) {
        int64_t p = static_cast<int64_t>(pi);
        Vertex src = reg.input_vertex(p);
        if (!mask.contains(src)) return;
        std::vector<int64_t> d(static_cast<std::size_t>((R + 1) * stride),
                               kInfCost);
        auto cell = [&](int64_t x, int64_t y) -> int64_t& {
          return d[static_cast<std::size_t>((x - reg.x0) * stride +
                                            (y - reg.y0))];
        };
        cell(src.x, src.y) = 0;
        for (int64_t x = src.x; x <= reg.x0 + R; x++) {
          for (int64_t y = reg.y0; y <= reg.y0 + C; y++) {
            if (!mask.contains({x, y})) continue;
            int64_t best = cell(x, y);
            if (x > reg.x0) best = std::min(best, sat_add(cell(x - 1, y), 1));
            if (y > reg.y0) best = std::min(best, sat_add(cell(x, y - 1), 1));
            if (x > reg.x0 && y > reg.y0)
              best = std::min(
                  best, sat_add(cell(x - 1, y - 1), rule.diag_weight(x, y)));
            cell(x, y) = best;
          }
        }
        for (int64_t q = 0; q < OUT; q++) {
          Vertex u = reg.output_vertex(q);
          out.dist[static_cast<std::size_t>(p * OUT + q)] = cell(u.x, u.y);
        }
      },
      1);
  if (stats) stats->base_solves++;
  return out;
}

// Copies a full-walk solution onto band-clipped walks.
SPMatrix project(const SPMatrix& full, const StripeRegion& reg) {
  SPMatrix out;
  out.reg = reg;
  const int64_t IN = reg.num_inputs();
  const int64_t OUT = reg.num_outputs();
  out.dist.resize(static_cast<std::size_t>(IN * OUT));
  for (int64_t p = 0; p < IN; p++) {
    int64_t fp = full.reg.input_index(reg.input_vertex(p));
    assert(fp >= 0);
    for (int64_t q = 0; q < OUT; q++) {
      int64_t fq = full.reg.output_index(reg.output_vertex(q));
      assert(fq >= 0);
      out.dist[static_cast<std::size_t>(p * OUT + q)] = full.at(fp, fq);
    }
  }
  return out;
}

SPMatrix solve_rec(const StripeRegion& reg, const PathMask& mask,
                   const EdgeRule& rule, const DacOptions& opt,
                   DacStats* stats) {
  assert(reg.feasible());
  if (std::min(reg.rows, reg.cols) <= opt.base_cutoff)
    return base_dp(reg, mask, rule, opt, stats);

  const int64_t n1 = (reg.rows + 1) / 2, m1 = (reg.cols + 1) / 2;
  const int64_t n2 = reg.rows - n1, m2 = reg.cols - m1;

  if (reg.band_clips()) {
    // Stripe split: the two halves along the diagonal plus the two
    // off-diagonal triangles, all under the same global band.
    const int64_t t1 = reg.hi, t2 = -reg.lo;
    const int64_t t1p = m1 + t1 - n1;  // G4-side widths
    const int64_t t2p = n1 - m1 + t2;
    bool fits = t1p <= std::min(n2, m1) && t2p <= std::min(n1, m2);
    if (!fits) {
      // Base rule of the recursion: the region is only a couple of band
      // widths tall, so solve its full rectangle under the band mask.
      StripeRegion rect{reg.x0, reg.y0, reg.rows, reg.cols, -reg.cols,
                        reg.rows};
      SPMatrix full = solve_rec(rect, mask, rule, opt, stats);
      return project(full, reg);
    }
    StripeRegion g1{reg.x0, reg.y0, n1, m1, reg.lo, reg.hi};
    StripeRegion g4{reg.x0 + n1, reg.y0 + m1, n2, m2, -t2p, t1p};
    SPMatrix d1, d2, d3, d4;
    par_do(
        [&] {
          par_do([&] { d1 = solve_rec(g1, mask, rule, opt, stats); },
                 [&] {
                   if (t1p >= 1) {
                     StripeRegion g2{reg.x0 + n1, reg.y0 + m1 - t1p, t1p, t1p,
                                     -(t1 + t2), 0};
                     d2 = solve_rec(g2, mask, rule, opt, stats);
                   }
                 });
        },
        [&] {
          par_do([&] { d4 = solve_rec(g4, mask, rule, opt, stats); },
                 [&] {
                   if (t2p >= 1) {
                     StripeRegion g3{reg.x0 + n1 - t2p, reg.y0 + m1, t2p, t2p,
                                     0, t1 + t2};
                     d3 = solve_rec(g3, mask, rule, opt, stats);
                   }
                 });
        });
    CombineScratch scratch;
    SPMatrix tmp, res;
    if (t2p == 0) {
      // Upper triangle degenerate: merge lower triangle into g4 first.
      combine_into(d2, d4, Stacking::kHorizontal, tmp, scratch, opt, stats);
      combine_into(d1, tmp, Stacking::kVertical, res, scratch, opt, stats);
    } else if (t1p == 0) {
      combine_into(d3, d4, Stacking::kVertical, tmp, scratch, opt, stats);
      combine_into(d1, tmp, Stacking::kHorizontal, res, scratch, opt, stats);
    } else {
      SPMatrix d12, d34;
      combine_into(d1, d2, Stacking::kVertical, d12, scratch, opt, stats);
      combine_into(d3, d4, Stacking::kVertical, d34, scratch, opt, stats);
      combine_into(d12, d34, Stacking::kHorizontal, res, scratch, opt, stats);
    }
    return res;
  }

  // Plain rectangle: quadrants, three combines.
  StripeRegion tl{reg.x0, reg.y0, n1, m1, -m1, n1};
  StripeRegion tr{reg.x0, reg.y0 + m1, n1, m2, -m2, n1};
  StripeRegion bl{reg.x0 + n1, reg.y0, n2, m1, -m1, n2};
  StripeRegion br{reg.x0 + n1, reg.y0 + m1, n2, m2, -m2, n2};
  SPMatrix dtl, dtr, dbl, dbr;
  par_do(
      [&] {
        par_do([&] { dtl = solve_rec(tl, mask, rule, opt, stats); },
               [&] { dtr = solve_rec(tr, mask, rule, opt, stats); });
      },
      [&] {
        par_do([&] { dbl = solve_rec(bl, mask, rule, opt, stats); },
               [&] { dbr = solve_rec(br, mask, rule, opt, stats); });
      });
  CombineScratch scratch;
  SPMatrix left, right, res;
  combine_into(dtl, dbl, Stacking::kVertical, left, scratch, opt, stats);
  combine_into(dtr, dbr, Stacking::kVertical, right, scratch, opt, stats);
  combine_into(left, right, Stacking::kHorizontal, res, scratch, opt, stats);
  return res;
}

}  // namespace

SPMatrix solve_boundary_sp(const StripeRegion& reg, const PathMask& mask,
                           const EdgeRule& rule, const DacOptions& opt,
                           DacStats* stats) {
  return solve_rec(reg, mask, rule, opt, stats);
}

SPMatrix rect_boundary_sp(const StripeRegion& rect, const EdgeRule& rule,
                          const DacOptions& opt, DacStats* stats) {
  if (rect.band_clips())
    throw std::invalid_argument("rect_boundary_sp requires an unclipped rectangle");
  return solve_rec(rect, PathMask{}, rule, opt, stats);
}

std::pair<int64_t, SPMatrix> check_stripe(int64_t t, const EdgeRule& rule,
                                          const DacOptions& opt,
                                          DacStats* stats) {
  const int64_t n = static_cast<int64_t>(rule.a->size());
  const int64_t m = static_cast<int64_t>(rule.b->size());
  if (t < std::max<int64_t>(1, std::abs(n - m)))
    throw std::invalid_argument("check_stripe: stripe excludes the corner");
  StripeRegion reg{0, 0, n, m, -t, t};
  SPMatrix sp = solve_rec(reg, mask_from_region(reg), rule, opt, stats);
  if (stats) stats->checks++;
  return {sp.corner_distance(), std::move(sp)};
}

DacResult edit_distance_dacmm(const Sequence& a, const Sequence& b,
                              const DacOptions& opt) {
  const int64_t n = static_cast<int64_t>(a.size());
  const int64_t m = static_cast<int64_t>(b.size());
  DacResult res;
  if (n == 0 || m == 0) {
    res.k = static_cast<uint64_t>(n + m);
    return res;
  }
  EdgeRule rule{&a, &b};
  DacStats stats;
  int64_t t = std::max<int64_t>(1, std::abs(n - m));
  for (;;) {
    auto [sigma, sp] = check_stripe(t, rule, opt, &stats);
    if (sigma <= t) {
      res.k = static_cast<uint64_t>(sigma);
      break;
    }
    assert(t < std::max(n, m));
    t = std::min(2 * t, std::max(n, m));
  }
  res.checks = stats.checks;
  res.scanned = stats.scanned();
  return res;
}

}  // namespace edist

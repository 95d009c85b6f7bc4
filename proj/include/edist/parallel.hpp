#pragma once

#include <cstddef>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/parallel_invoke.h>

namespace edist {

// Caps the worker count for the whole process. Call before any parallel
// region; later calls replace the cap. n = 0 restores the hardware default.
void set_num_workers(std::size_t n);
std::size_t num_workers();

// Fork-join primitives. All algorithms in this project write disjoint slots
// inside parallel regions, so results do not depend on the schedule.
template <typename F, typename G>
inline void par_do(F&& f, G&& g) {
  tbb::parallel_invoke(static_cast<F&&>(f), static_cast<G&&>(g));
}

template <typename F>
inline void parallel_for(std::size_t lo, std::size_t hi, F&& f,
                         std::size_t grain = 1024) {
  if (hi <= lo) return;
  if (hi - lo <= grain) {
    for (std::size_t i = lo; i < hi; i++) f(i);
    return;
  }
  tbb::parallel_for(tbb::blocked_range<std::size_t>(lo, hi, grain),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); i++) f(i);
                    });
}

}  // namespace edist

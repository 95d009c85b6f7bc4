#include "edist/parallel.hpp"

#include <memory>
#include <thread>

#include <tbb/global_control.h>

namespace edist {

namespace {
std::unique_ptr<tbb::global_control> g_control;
std::size_t g_workers = 0;
}  // namespace

void set_num_workers(std::size_t n) {
  g_control.reset();
  g_workers = n;
  if (n > 0) {
    g_control = std::make_unique<tbb::global_control>(
        tbb::global_control::max_allowed_parallelism, n);
  }
}

std::size_t num_workers() {
  if (g_workers > 0) return g_workers;
  std::size_t hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace edist

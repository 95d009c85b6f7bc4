#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edist/sequence.hpp"

namespace edist {

enum class AlgoId { kBfsSa, kBfsH, kBfsBh, kDacMm, kDp, kAntidiag };

std::optional<AlgoId> parse_algo(const std::string& name);
const char* algo_name(AlgoId id);

struct VerifyMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  uint64_t block = 32;              // blocked hash table block size
  int reps = 3;                     // repetitions; the median is reported
  bool verify = false;              // cross-check k against the DP oracle
  uint64_t dp_cell_cap = 100'000'000;
  uint64_t hash_seed = 0x9e3779b97f4a7c15ull;
  bool double_hash = false;
  uint32_t sa_fast_path = 8;
  std::size_t bfs_grain = 512;
};

struct RunReport {
  std::string algo;
  std::size_t n = 0, m = 0;
  uint64_t k = 0;                   // computed distance, never the requested one
  std::optional<uint64_t> block;    // set for hash-table algorithms only
  double build_s = 0, query_s = 0, total_s = 0;
  uint64_t lcp_queries = 0;
  uint64_t frontier_total = 0;
  uint64_t checks = 0;              // prefix-doubling check calls
  int reps = 1;
  bool median_of_reps = false;
};

// Runs one algorithm with a build/query timing split, reporting the median
// over `reps` repetitions. Throws VerifyMismatch when --verify finds a
// disagreement with the DP oracle and CapExceeded when verification would
// blow the cell cap.
RunReport run_algorithm(AlgoId id, const Sequence& a, const Sequence& b,
                        const RunOptions& opt = {});

// Header plus one row per report:
// algo,n,m,k,b,build_s,query_s,total_s,lcp_queries,frontier_total,checks,reps
// Seconds carry six decimals; the b column is empty for non-hash algorithms.
void emit_csv(const std::vector<RunReport>& reports, const std::string& path);
std::string csv_string(const std::vector<RunReport>& reports);

}  // namespace edist

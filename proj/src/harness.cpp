#include "edist/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "edist/bfs_edit.hpp"
#include "edist/dacmm.hpp"
#include "edist/lcp_backends.hpp"
#include "edist/oracle.hpp"

namespace edist {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct RepSample {
  double build_s = 0, query_s = 0;
  uint64_t k = 0;
  uint64_t lcp_queries = 0, frontier_total = 0, checks = 0;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

std::optional<AlgoId> parse_algo(const std::string& name) {
  if (name == "bfs-sa") return AlgoId::kBfsSa;
  if (name == "bfs-h") return AlgoId::kBfsH;
  if (name == "bfs-bh") return AlgoId::kBfsBh;
  if (name == "dac-mm") return AlgoId::kDacMm;
  if (name == "dp") return AlgoId::kDp;
  if (name == "antidiag") return AlgoId::kAntidiag;
  return std::nullopt;
}

const char* algo_name(AlgoId id) {
  switch (id) {
    case AlgoId::kBfsSa: return "bfs-sa";
    case AlgoId::kBfsH: return "bfs-h";
    case AlgoId::kBfsBh: return "bfs-bh";
    case AlgoId::kDacMm: return "dac-mm";
    case AlgoId::kDp: return "dp";
    case AlgoId::kAntidiag: return "antidiag";
  }
  return "?";
}

RunReport run_algorithm(AlgoId id, const Sequence& a_in, const Sequence& b_in,
                        const RunOptions& opt) {
  Sequence a = a_in, b = b_in;
  align_alphabets(a, b);
  HashConfig hcfg{opt.hash_seed, opt.double_hash};
  BfsOptions bfs_opt{opt.bfs_grain};

  auto one_rep = [&]() -> RepSample {
    RepSample s;
    auto t0 = std::chrono::steady_clock::now();
    switch (id) {
      case AlgoId::kBfsSa: {
        SaLcp backend(a, b, opt.sa_fast_path);
        s.build_s = seconds_since(t0);
        auto t1 = std::chrono::steady_clock::now();
        auto [k, st] = edit_distance_bfs(a, b, backend, bfs_opt);
        s.query_s = seconds_since(t1);
        s.k = k;
        s.lcp_queries = st.lcp_queries;
        s.frontier_total = st.frontier_total;
        break;
      }
      case AlgoId::kBfsH: {
        PrefixHashLcp backend(a, b, hcfg);
        s.build_s = seconds_since(t0);
        auto t1 = std::chrono::steady_clock::now();
        auto [k, st] = edit_distance_bfs(a, b, backend, bfs_opt);
        s.query_s = seconds_since(t1);
        s.k = k;
        s.lcp_queries = st.lcp_queries;
        s.frontier_total = st.frontier_total;
        break;
      }
      case AlgoId::kBfsBh: {
        BlockedHashLcp backend(a, b, opt.block, hcfg);
        s.build_s = seconds_since(t0);
        auto t1 = std::chrono::steady_clock::now();
        auto [k, st] = edit_distance_bfs(a, b, backend, bfs_opt);
        s.query_s = seconds_since(t1);
        s.k = k;
        s.lcp_queries = st.lcp_queries;
        s.frontier_total = st.frontier_total;
        break;
      }
      case AlgoId::kDacMm: {
        auto res = edit_distance_dacmm(a, b);
        s.query_s = seconds_since(t0);
        s.k = res.k;
        s.checks = res.checks;
        break;
      }
      case AlgoId::kDp: {
        s.k = dp_edit_distance(a, b, DpOptions{opt.dp_cell_cap, false}).k;
        s.query_s = seconds_since(t0);
        break;
      }
      case AlgoId::kAntidiag: {
        s.k = antidiagonal_edit_distance(a, b, DpOptions{opt.dp_cell_cap, false});
        s.query_s = seconds_since(t0);
        break;
      }
    }
    return s;
  };

  int reps = std::max(1, opt.reps);
  std::vector<RepSample> samples;
  samples.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; r++) samples.push_back(one_rep());
  for (const auto& s : samples) {
    if (s.k != samples[0].k)
      throw VerifyMismatch("repetitions disagree on k for " +
                           std::string(algo_name(id)));
  }

  RunReport rep;
  rep.algo = algo_name(id);
  rep.n = a.size();
  rep.m = b.size();
  rep.k = samples[0].k;
  if (id == AlgoId::kBfsBh) rep.block = opt.block;
  if (id == AlgoId::kBfsH) rep.block = 1;
  std::vector<double> builds, queries, totals;
  for (const auto& s : samples) {
    builds.push_back(s.build_s);
    queries.push_back(s.query_s);
    totals.push_back(s.build_s + s.query_s);
  }
  rep.build_s = median(builds);
  rep.query_s = median(queries);
  rep.total_s = median(totals);
  rep.lcp_queries = samples[0].lcp_queries;
  rep.frontier_total = samples[0].frontier_total;
  rep.checks = samples[0].checks;
  rep.reps = reps;
  rep.median_of_reps = reps > 1;

  if (opt.verify && id != AlgoId::kDp) {
    uint64_t want = dp_edit_distance(a, b, DpOptions{opt.dp_cell_cap, false}).k;
    if (want != rep.k)
      throw VerifyMismatch(std::string(algo_name(id)) + " reported k=" +
                           std::to_string(rep.k) + " but the DP oracle says " +
                           std::to_string(want));
  }
  return rep;
}

std::string csv_string(const std::vector<RunReport>& reports) {
  std::string out =
      "algo,n,m,k,b,build_s,query_s,total_s,lcp_queries,frontier_total,checks,"
      "reps\n";
  char buf[256];
  for (const auto& r : reports) {
    std::string b = r.block ? std::to_string(*r.block) : "";
    std::snprintf(buf, sizeof(buf), "%s,%zu,%zu,%llu,%s,%.6f,%.6f,%.6f,%llu,%llu,%llu,%d\n",
                  r.algo.c_str(), r.n, r.m,
                  static_cast<unsigned long long>(r.k), b.c_str(), r.build_s,
                  r.query_s, r.total_s,
                  static_cast<unsigned long long>(r.lcp_queries),
                  static_cast<unsigned long long>(r.frontier_total),
                  static_cast<unsigned long long>(r.checks), r.reps);
    out += buf;
  }
  return out;
}

void emit_csv(const std::vector<RunReport>& reports, const std::string& path) {
  if (reports.empty())
    throw std::invalid_argument("emit_csv: no reports to write");
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  std::string s = csv_string(reports);
  std::size_t written = std::fwrite(s.data(), 1, s.size(), f);
  std::fclose(f);
  if (written != s.size()) throw std::runtime_error("short write on " + path);
}

}  // namespace edist

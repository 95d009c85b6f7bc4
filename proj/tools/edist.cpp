#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edist/generator.hpp"
#include "edist/harness.hpp"
#include "edist/hashing.hpp"
#include "edist/oracle.hpp"
#include "edist/parallel.hpp"
#include "edist/sequence.hpp"

namespace {

// --threads beats ED_NUM_THREADS beats the hardware default.
void apply_thread_setting(std::size_t cli_threads) {
  if (cli_threads > 0) {
    edist::set_num_workers(cli_threads);
    return;
  }
  if (const char* env = std::getenv("ED_NUM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      edist::set_num_workers(static_cast<std::size_t>(v));
      return;
    }
    std::fprintf(stderr, "warning: ignoring non-positive ED_NUM_THREADS=%s\n",
                 env);
  }
}

std::vector<edist::RunReport> g_reports;

void print_report(const edist::RunReport& r) {
  std::printf("%-8s n=%zu m=%zu k=%llu", r.algo.c_str(), r.n, r.m,
              static_cast<unsigned long long>(r.k));
  if (r.block) std::printf(" b=%llu", static_cast<unsigned long long>(*r.block));
  std::printf(" build=%.6fs query=%.6fs total=%.6fs", r.build_s, r.query_s,
              r.total_s);
  if (r.lcp_queries)
    std::printf(" lcp_queries=%llu",
                static_cast<unsigned long long>(r.lcp_queries));
  if (r.checks)
    std::printf(" checks=%llu", static_cast<unsigned long long>(r.checks));
  std::printf(" reps=%d\n", r.reps);
}

// The block-size sweep of the space study: stored words per table for each
// power-of-two block size.
void print_space_table(const edist::Sequence& a) {
  edist::HashFamily fam = edist::make_hash_family(a.sigma);
  std::printf("\nblocked-table auxiliary space (n=%zu):\n", a.size());
  std::printf("%8s %14s %14s %10s\n", "b", "words", "bytes", "bytes/n");
  for (uint64_t b = 1; b <= 64; b *= 2) {
    auto t = edist::build_blocked_table(a, b, fam);
    std::size_t words = t.aux_words();
    std::printf("%8llu %14zu %14zu %10.4f\n",
                static_cast<unsigned long long>(b), words, words * 8,
                a.size() ? 8.0 * static_cast<double>(words) /
                               static_cast<double>(a.size())
                         : 0.0);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parallel output-sensitive edit distance toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic pair");
  edist::GenSpec spec;
  std::string out_a, out_b;
  gen->add_option("--n", spec.n, "string length")->required();
  gen->add_option("--k", spec.k, "requested edit count")->required();
  gen->add_option("--sigma", spec.sigma, "alphabet size (2..256)")
      ->default_val(256);
  gen->add_option("--seed", spec.seed, "generator seed")->default_val(1);
  gen->add_option("--out-a", out_a, "output path for A")->required();
  gen->add_option("--out-b", out_b, "output path for B")->required();

  // run
  auto* run = app.add_subcommand("run", "run one algorithm on a pair of files");
  std::string algo_str, path_a, path_b, run_csv;
  edist::RunOptions ropt;
  std::size_t threads = 0;
  run->add_option("--algo", algo_str,
                  "bfs-sa|bfs-h|bfs-bh|dac-mm|dp|antidiag")
      ->required();
  run->add_option("--a", path_a, "path to A")->required();
  run->add_option("--b", path_b, "path to B")->required();
  run->add_option("--block-size", ropt.block, "blocked hash block size")
      ->default_val(32);
  run->add_option("--threads", threads, "worker count (0 = default)");
  run->add_option("--reps", ropt.reps, "repetitions, median reported")
      ->default_val(3);
  run->add_flag("--verify", ropt.verify, "cross-check against the DP oracle");
  run->add_option("--csv", run_csv, "append-style CSV output path");
  run->add_option("--cell-cap", ropt.dp_cell_cap,
                  "max n*m cells for dp/antidiag/verify");

  // bench
  auto* bench = app.add_subcommand("bench", "synthetic benchmark grid");
  std::string suite = "synthetic", bench_csv;
  std::vector<std::size_t> n_list, k_list;
  std::vector<std::string> algo_list;
  uint32_t bench_sigma = 256;
  uint64_t bench_seed = 1;
  int bench_reps = 3;
  std::size_t bench_threads = 0;
  bool bench_verify = false;
  uint64_t bench_cap = 100'000'000;
  bench->add_option("--suite", suite, "benchmark suite")->default_val("synthetic");
  bench->add_option("--n-list", n_list, "input lengths")->required()
      ->delimiter(',');
  bench->add_option("--k-list", k_list, "requested edit counts")->required()
      ->delimiter(',');
  bench->add_option("--sigma", bench_sigma, "alphabet size")->default_val(256);
  bench->add_option("--seed", bench_seed, "generator seed")->default_val(1);
  bench->add_option("--algos", algo_list, "subset of algorithms")
      ->delimiter(',');
  bench->add_option("--reps", bench_reps, "repetitions")->default_val(3);
  bench->add_option("--threads", bench_threads, "worker count (0 = default)");
  bench->add_flag("--verify", bench_verify, "cross-check each run");
  bench->add_option("--cell-cap", bench_cap, "max n*m cells for dp/antidiag");
  bench->add_option("--csv", bench_csv, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) {
      if (spec.sigma < 2 || spec.sigma > 256) {
        std::fprintf(stderr, "error: --sigma must be in [2, 256]\n");
        return 1;
      }
      if (spec.k > spec.n) {
        std::fprintf(stderr, "error: --k must not exceed --n\n");
        return 1;
      }
      auto [a, b] = edist::generate_edits(spec);
      edist::save_sequence(a, out_a);
      edist::save_sequence(b, out_b);
      std::printf("wrote %s (%zu bytes) and %s (%zu bytes)\n", out_a.c_str(),
                  a.size(), out_b.c_str(), b.size());
      return 0;
    }

    if (*run) {
      apply_thread_setting(threads);
      auto algo = edist::parse_algo(algo_str);
      if (!algo) {
        std::fprintf(stderr, "error: unknown algorithm '%s'\n",
                     algo_str.c_str());
        return 1;
      }
      edist::Sequence a = edist::load_sequence(path_a);
      edist::Sequence b = edist::load_sequence(path_b);
      edist::RunReport rep = edist::run_algorithm(*algo, a, b, ropt);
      print_report(rep);
      if (!run_csv.empty()) edist::emit_csv({rep}, run_csv);
      return 0;
    }

    if (*bench) {
      apply_thread_setting(bench_threads);
      if (suite != "synthetic") {
        std::fprintf(stderr, "error: unknown suite '%s'\n", suite.c_str());
        return 1;
      }
      std::vector<edist::AlgoId> algos;
      if (algo_list.empty()) {
        algos = {edist::AlgoId::kBfsSa,  edist::AlgoId::kBfsH,
                 edist::AlgoId::kBfsBh,  edist::AlgoId::kDacMm,
                 edist::AlgoId::kDp,     edist::AlgoId::kAntidiag};
      } else {
        for (const auto& s : algo_list) {
          auto id = edist::parse_algo(s);
          if (!id) {
            std::fprintf(stderr, "error: unknown algorithm '%s'\n", s.c_str());
            return 1;
          }
          algos.push_back(*id);
        }
      }
      edist::RunOptions opt;
      opt.reps = bench_reps;
      opt.verify = bench_verify;
      opt.dp_cell_cap = bench_cap;
      for (std::size_t n : n_list) {
        for (std::size_t k : k_list) {
          if (k > n) continue;
          auto [a, b] = edist::generate_edits(
              edist::GenSpec{n, k, bench_sigma, bench_seed});
          for (auto id : algos) {
            if ((id == edist::AlgoId::kDp || id == edist::AlgoId::kAntidiag) &&
                static_cast<uint64_t>(a.size()) * b.size() > bench_cap) {
              std::printf("%-8s n=%zu skipped (cell cap)\n",
                          edist::algo_name(id), n);
              continue;
            }
            edist::RunReport rep = edist::run_algorithm(id, a, b, opt);
            print_report(rep);
            g_reports.push_back(rep);
          }
        }
      }
      if (!g_reports.empty()) edist::emit_csv(g_reports, bench_csv);
      if (!n_list.empty()) {
        auto [a, b] = edist::generate_edits(
            edist::GenSpec{n_list.back(), 0, bench_sigma, bench_seed});
        print_space_table(a);
      }
      return 0;
    }
  } catch (const edist::VerifyMismatch& e) {
    std::fprintf(stderr, "verification mismatch: %s\n", e.what());
    return 2;
  } catch (const edist::CapExceeded& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

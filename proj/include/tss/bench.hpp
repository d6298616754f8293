#pragma once

// Small benchmarking harness over generated instances: one run per
// (engine, t, n) grid point, with per-run timeouts that do not stop the
// remaining grid.

#include <cstdint>
#include <string>
#include <vector>

#include "tss/generator.hpp"
#include "tss/instance.hpp"

namespace tss {

struct BenchSpec {
  std::vector<std::string> engines;  // subset of {"fpt", "brute", "greedy"}
  std::vector<int> t_values;
  std::vector<int> n_values;
  double edge_density = 0.3;
  ThresholdMode mode = ThresholdMode::kUniformRandom;
  int constant_c = 2;
  std::uint64_t seed = 1;
  double timeout_seconds = 60.0;
  int threads = 1;
  int brute_cap = 20;
};

struct BenchRow {
  std::string engine;
  int n = 0;
  int m = 0;
  int t = 0;  // designated cover size of the generated instance
  bool timed_out = false;
  int result_size = 0;  // meaningful when !timed_out
  long long ms = 0;
  long long guesses = 0;  // fpt only
  long long cells = 0;    // fpt only
};

// Grid order: t outer, n inner, engines innermost.  The same instance
// (derived deterministically from spec.seed and the grid point) is handed
// to every engine of a grid point.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

// Human-readable aligned table.
std::string format_bench_table(const std::vector<BenchRow>& rows);

// One machine-readable line per row:
//   B <engine> <n> <m> <t> <result|T/O> <ms> <guesses> <cells>
std::string format_bench_lines(const std::vector<BenchRow>& rows);

}  // namespace tss

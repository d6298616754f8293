#include "tss/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "tss/baseline.hpp"
#include "tss/fpt_solver.hpp"

namespace tss {

namespace {

// Stable per-grid-point seed: decouples rows so editing the grid does not
// reshuffle the instances of untouched points.
std::uint64_t mix_seed(std::uint64_t seed, int t, int n) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  h ^= static_cast<std::uint64_t>(t) * 0xff51afd7ed558ccdull;
  h ^= static_cast<std::uint64_t>(n) * 0xc4ceb9fe1a85ec53ull;
  h ^= h >> 33;
  return h;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  using clock = std::chrono::steady_clock;
  for (const auto& engine : spec.engines)
    if (engine != "fpt" && engine != "brute" && engine != "greedy")
      throw std::invalid_argument("unknown engine '" + engine + "'");

  std::vector<BenchRow> rows;
  for (int t : spec.t_values)
    for (int n : spec.n_values) {
      TssInstance instance =
          generate_bounded_vc(t, n, spec.edge_density, spec.mode, spec.constant_c,
                              mix_seed(spec.seed, t, n));
      for (const auto& engine : spec.engines) {
        BenchRow row{engine, n, instance.edge_count(), t, false, 0, 0, 0, 0};
        const auto start = clock::now();
        const auto deadline =
            start + std::chrono::duration_cast<clock::duration>(
                        std::chrono::duration<double>(spec.timeout_seconds));
        try {
          if (engine == "fpt") {
            SolveOptions options;
            options.threads = spec.threads;
            options.deadline = deadline;
            SolveResult result = solve_optimal(instance, options);
            row.result_size = result.optimum_size;
            row.guesses = result.stats.at("guesses");
            row.cells = result.stats.at("cells");
          } else if (engine == "brute") {
            SolveResult result = brute_force_tss(instance, spec.brute_cap, deadline);
            row.result_size = result.optimum_size;
          } else if (engine == "greedy") {
            row.result_size = static_cast<int>(greedy_tss(instance).size());
          }
        } catch (const TimeoutError&) {
          row.timed_out = true;
        } catch (const std::invalid_argument&) {
          // engine not applicable to this size (e.g. brute above its cap)
          row.timed_out = true;
        }
        row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() -
                                                                       start)
                     .count();
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "engine" << std::right << std::setw(7) << "n"
      << std::setw(8) << "m" << std::setw(4) << "t" << std::setw(8) << "size"
      << std::setw(10) << "ms" << std::setw(12) << "guesses" << std::setw(12)
      << "cells" << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(8) << r.engine << std::right << std::setw(7) << r.n
        << std::setw(8) << r.m << std::setw(4) << r.t << std::setw(8);
    if (r.timed_out)
      out << "T/O";
    else
      out << r.result_size;
    out << std::setw(10) << r.ms << std::setw(12) << r.guesses << std::setw(12)
        << r.cells << '\n';
  }
  return out.str();
}

std::string format_bench_lines(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "B " << r.engine << ' ' << r.n << ' ' << r.m << ' ' << r.t << ' ';
    if (r.timed_out)
      out << "T/O";
    else
      out << r.result_size;
    out << ' ' << r.ms << ' ' << r.guesses << ' ' << r.cells << '\n';
  }
  return out.str();
}

}  // namespace tss

// tss: command-line front end for the target set selection toolkit.
//
// Exit codes: 0 = success / YES, 1 = NO / infeasible, 2 = usage or input
// error.  Instances are read from a file argument ('-' reads stdin);
// results go to standard output in the formats documented in tss/io.hpp.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tss/baseline.hpp"
#include "tss/bench.hpp"
#include "tss/diffusion.hpp"
#include "tss/fpt_solver.hpp"
#include "tss/generator.hpp"
#include "tss/instance.hpp"
#include "tss/io.hpp"
#include "tss/reductions.hpp"
#include "tss/vertex_cover.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

tss::TssInstance load_tss(const std::string& path) {
  return tss::parse_tss(std::string_view(slurp(path)));
}

tss::SetCoverInstance load_setcover(const std::string& path) {
  return tss::parse_setcover(std::string_view(slurp(path)));
}

// Whitespace-separated 1-based ids; '#' comments and 'c' comment lines
// are allowed, matching the instance formats.
std::vector<int> read_id_list(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<int> ids;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tok;
    bool first = true;
    while (fields >> tok) {
      if (first && tok == "c") break;
      first = false;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw std::runtime_error(path + ": bad id '" + tok + "'");
      ids.push_back(v);
    }
  }
  return ids;
}

std::vector<int> inline_ids(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> ids;
  int v = 0;
  while (in >> v) ids.push_back(v);
  if (!in.eof()) throw std::runtime_error("bad id list '" + text + "'");
  return ids;
}

tss::VertexSet to_vertices(const std::vector<int>& one_based, int n,
                           const std::string& what) {
  std::vector<int> ids;
  ids.reserve(one_based.size());
  for (int v : one_based) {
    if (v < 1 || v > n)
      throw std::runtime_error(what + ": vertex " + std::to_string(v) +
                               " out of range 1.." + std::to_string(n));
    ids.push_back(v - 1);
  }
  return tss::VertexSet(std::move(ids));
}

tss::ThresholdMode parse_mode(const std::string& name) {
  if (name == "uniform") return tss::ThresholdMode::kUniformRandom;
  if (name == "constant") return tss::ThresholdMode::kConstant;
  if (name == "majority") return tss::ThresholdMode::kMajority;
  throw std::runtime_error("unknown threshold mode '" + name + "'");
}

struct SolveArgs {
  std::string file;
  std::string engine = "fpt";
  int k = -1;  // < 0: minimize
  bool strict_discard = false;
  bool no_reduce = false;
  int threads = 1;
  std::string cover_file;
  int cap = 20;
  int max_t = 6;
};

int run_solve(const SolveArgs& a) {
  tss::TssInstance instance = load_tss(a.file);
  bool decide = a.k >= 0;

  if (a.engine == "greedy") {
    if (decide)
      throw std::runtime_error("--k needs an exact engine (fpt or brute)");
    tss::VertexSet seeds = tss::greedy_tss(instance);
    std::cout << tss::write_result(
        {static_cast<int>(seeds.size()), seeds, {}});
    return 0;
  }

  if (a.engine == "brute") {
    tss::SolveResult result = tss::brute_force_tss(instance, a.cap);
    if (decide && result.optimum_size > a.k) {
      std::cout << "c NO: minimum target set has size " << result.optimum_size
                << " > " << a.k << "\n";
      return 1;
    }
    std::cout << tss::write_result(result);
    return 0;
  }

  tss::SolveOptions options;
  options.strict_discard = a.strict_discard;
  options.reduce = !a.no_reduce;
  options.threads = a.threads;
  options.max_cover_size = a.max_t;

  std::optional<tss::VertexSet> cover;
  if (!a.cover_file.empty())
    cover = to_vertices(read_id_list(a.cover_file), instance.vertex_count(),
                        a.cover_file);

  if (decide) {
    tss::VertexSet c =
        cover ? *cover : tss::select_solver_cover(instance);
    std::optional<tss::VertexSet> witness =
        tss::solve_decision(instance, c, a.k, options);
    if (!witness) {
      std::cout << "c NO: no target set of size <= " << a.k << "\n";
      return 1;
    }
    std::cout << tss::write_result(
        {static_cast<int>(witness->size()), *witness, {}});
    return 0;
  }

  options.cover = cover;
  std::cout << tss::write_result(tss::solve_optimal(instance, options));
  return 0;
}

int run_simulate(const std::string& file, const std::string& seed_text) {
  tss::TssInstance instance = load_tss(file);
  tss::VertexSet seed =
      to_vertices(inline_ids(seed_text), instance.vertex_count(), "--seed");
  std::cout << tss::write_trace(tss::diffuse(instance, seed));
  return 0;
}

int run_verify(const std::string& file, const std::string& witness_file) {
  tss::TssInstance instance = load_tss(file);
  tss::VertexSet witness = to_vertices(
      read_id_list(witness_file), instance.vertex_count(), witness_file);
  tss::VertexSet reached = tss::influence(instance, witness);
  bool ok = static_cast<int>(reached.size()) == instance.vertex_count();
  std::cout << (ok ? "yes" : "no") << "\n"
            << "c activated " << reached.size() << " of "
            << instance.vertex_count() << " vertices from " << witness.size()
            << " seeds\n";
  return ok ? 0 : 1;
}

int run_sc2tss(const std::string& file, bool strict) {
  tss::SetCoverInstance sc = load_setcover(file);
  tss::SetCoverReduction red = tss::setcover_to_tss(sc, strict);
  for (int j : red.empty_subsets)
    std::cout << "c warning: subset " << (j + 1)
              << " is empty; its vertex got threshold 1 and must be seeded\n";
  std::cout << tss::write_tss(red.graph);
  return 0;
}

int run_subdivide(const std::string& file) {
  std::cout << tss::write_tss(tss::subdivide_to_bipartite(load_tss(file)));
  return 0;
}

int run_normalize(const std::string& file, const std::string& witness_file) {
  tss::TssInstance instance = load_tss(file);
  tss::VertexSet witness = to_vertices(
      read_id_list(witness_file), instance.vertex_count(), witness_file);
  tss::VertexSet normalized =
      tss::normalize_bipartite_solution(instance, witness);
  std::cout << tss::write_result(
      {static_cast<int>(normalized.size()), normalized, {}});
  return 0;
}

int run_greedy_sc(const std::string& file) {
  tss::SetCoverInstance sc = load_setcover(file);
  std::vector<int> picks = tss::greedy_set_cover(sc);
  std::cout << "c pick order:";
  for (int j : picks) std::cout << " " << (j + 1);
  std::cout << "\n"
            << tss::write_result(
                   {static_cast<int>(picks.size()), tss::VertexSet(picks), {}});
  return 0;
}

struct GenTssArgs {
  int t = 0;
  int n = 0;
  double density = 0.3;
  std::string mode = "uniform";
  int constant_c = 2;
  std::uint64_t seed = 1;
};

struct BenchArgs {
  std::vector<std::string> engines{"fpt"};
  std::vector<int> t_list;
  std::vector<int> n_list;
  double density = 0.3;
  std::string mode = "uniform";
  int constant_c = 2;
  std::uint64_t seed = 1;
  double timeout = 60.0;
  int threads = 1;
  int cap = 20;
};

int run_bench(const BenchArgs& a) {
  tss::BenchSpec spec;
  spec.engines = a.engines;
  spec.t_values = a.t_list;
  spec.n_values = a.n_list;
  spec.edge_density = a.density;
  spec.mode = parse_mode(a.mode);
  spec.constant_c = a.constant_c;
  spec.seed = a.seed;
  spec.timeout_seconds = a.timeout;
  spec.threads = a.threads;
  spec.brute_cap = a.cap;
  std::vector<tss::BenchRow> rows = tss::run_bench(spec);
  std::cout << tss::format_bench_table(rows) << tss::format_bench_lines(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"target set selection toolkit"};
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);
  int rc = 0;

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "minimum target set, or the size <= k decision with --k");
  solve->add_option("file", solve_args.file, "instance file ('-' = stdin)")
      ->required();
  solve->add_option("--engine", solve_args.engine, "fpt | brute | greedy")
      ->check(CLI::IsMember({"fpt", "brute", "greedy"}));
  solve->add_option("--k", solve_args.k, "decide: target set of size <= k?")
      ->check(CLI::NonNegativeNumber);
  solve->add_flag("--strict-discard", solve_args.strict_discard,
                  "drop stamp assignments with any demand >= cover size");
  solve->add_flag("--no-reduce", solve_args.no_reduce,
                  "skip the forced-vertex peeling (debugging aid)");
  solve->add_option("--threads", solve_args.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  solve->add_option("--cover", solve_args.cover_file,
                    "vertex cover file (1-based ids) to parameterize on");
  solve->add_option("--cap", solve_args.cap,
                    "vertex-count cap for the brute engine")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--max-t", solve_args.max_t,
                    "largest cover size the fpt engine accepts")
      ->check(CLI::NonNegativeNumber);
  solve->callback([&] { rc = run_solve(solve_args); });

  std::string sim_file, sim_seed;
  CLI::App* simulate =
      app.add_subcommand("simulate", "print the activation trace of a seed set");
  simulate->add_option("file", sim_file, "instance file ('-' = stdin)")
      ->required();
  simulate->add_option("--seed", sim_seed, "seed vertices, e.g. \"1 4 5\"");
  simulate->callback([&] { rc = run_simulate(sim_file, sim_seed); });

  std::string ver_file, ver_witness;
  CLI::App* verify =
      app.add_subcommand("verify", "check that a witness file is a target set");
  verify->add_option("file", ver_file, "instance file ('-' = stdin)")
      ->required();
  verify->add_option("--witness", ver_witness, "file of 1-based vertex ids")
      ->required();
  verify->callback([&] { rc = run_verify(ver_file, ver_witness); });

  CLI::App* reduce = app.add_subcommand("reduce", "problem transformations");
  reduce->require_subcommand(1);
  std::string sc2_file;
  bool sc2_strict = false;
  CLI::App* sc2tss = reduce->add_subcommand(
      "sc2tss", "set cover -> bipartite target set instance");
  sc2tss->add_option("file", sc2_file, "set cover file ('-' = stdin)")
      ->required();
  sc2tss->add_flag("--strict", sc2_strict, "reject empty subsets");
  sc2tss->callback([&] { rc = run_sc2tss(sc2_file, sc2_strict); });
  std::string sub_file;
  CLI::App* subdivide = reduce->add_subcommand(
      "subdivide", "replace each edge by a threshold-1 middle vertex");
  subdivide->add_option("file", sub_file, "instance file ('-' = stdin)")
      ->required();
  subdivide->callback([&] { rc = run_subdivide(sub_file); });

  std::string norm_file, norm_witness;
  CLI::App* normalize = app.add_subcommand(
      "normalize", "pull a bipartite solution onto the subset side");
  normalize->add_option("file", norm_file, "instance file ('-' = stdin)")
      ->required();
  normalize->add_option("--witness", norm_witness, "file of 1-based vertex ids")
      ->required();
  normalize->callback([&] { rc = run_normalize(norm_file, norm_witness); });

  CLI::App* generate = app.add_subcommand("generate", "random instances");
  generate->require_subcommand(1);
  GenTssArgs gen_tss;
  CLI::App* gtss = generate->add_subcommand(
      "tss", "graph with a designated vertex cover of size t");
  gtss->add_option("--t", gen_tss.t, "designated cover size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gtss->add_option("--n", gen_tss.n, "vertex count")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gtss->add_option("--density", gen_tss.density, "edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gtss->add_option("--mode", gen_tss.mode, "uniform | constant | majority")
      ->check(CLI::IsMember({"uniform", "constant", "majority"}));
  gtss->add_option("--constant-c", gen_tss.constant_c,
                   "threshold for --mode constant")
      ->check(CLI::PositiveNumber);
  gtss->add_option("--seed", gen_tss.seed, "rng seed");
  gtss->callback([&] {
    std::cout << tss::write_tss(tss::generate_bounded_vc(
        gen_tss.t, gen_tss.n, gen_tss.density, parse_mode(gen_tss.mode),
        gen_tss.constant_c, gen_tss.seed));
    rc = 0;
  });
  int gsc_n = 0, gsc_m = 0;
  double gsc_density = 0.3;
  std::uint64_t gsc_seed = 1;
  CLI::App* gsc = generate->add_subcommand("sc", "set cover instance");
  gsc->add_option("--n", gsc_n, "ground set size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gsc->add_option("--m", gsc_m, "subset count")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gsc->add_option("--density", gsc_density, "membership probability")
      ->check(CLI::Range(0.0, 1.0));
  gsc->add_option("--seed", gsc_seed, "rng seed");
  gsc->callback([&] {
    std::cout << tss::write_setcover(
        tss::generate_setcover(gsc_n, gsc_m, gsc_density, gsc_seed));
    rc = 0;
  });

  std::string gsc_file;
  CLI::App* greedy_sc = app.add_subcommand(
      "greedy-sc", "greedy set cover (harmonic approximation)");
  greedy_sc->add_option("file", gsc_file, "set cover file ('-' = stdin)")
      ->required();
  greedy_sc->callback([&] { rc = run_greedy_sc(gsc_file); });

  BenchArgs bench_args;
  CLI::App* bench =
      app.add_subcommand("bench", "engine comparison over a generated grid");
  bench->add_option("--engines", bench_args.engines, "fpt,brute,greedy")
      ->delimiter(',');
  bench->add_option("--t-list", bench_args.t_list, "cover sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--n-list", bench_args.n_list, "vertex counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--density", bench_args.density, "edge probability")
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--mode", bench_args.mode, "uniform | constant | majority")
      ->check(CLI::IsMember({"uniform", "constant", "majority"}));
  bench->add_option("--constant-c", bench_args.constant_c,
                    "threshold for --mode constant");
  bench->add_option("--seed", bench_args.seed, "rng seed");
  bench->add_option("--timeout", bench_args.timeout, "seconds per run")
      ->check(CLI::PositiveNumber);
  bench->add_option("--threads", bench_args.threads, "fpt worker threads")
      ->check(CLI::PositiveNumber);
  bench->add_option("--cap", bench_args.cap,
                    "vertex-count cap for the brute engine");
  bench->callback([&] { rc = run_bench(bench_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const tss::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

// Python bindings for the target set selection toolkit.  The module keeps
// to plain Python types at the boundary: vertex sets go in and out as
// sorted lists of ints, results as small bound structs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tss/baseline.hpp"
#include "tss/diffusion.hpp"
#include "tss/fpt_solver.hpp"
#include "tss/generator.hpp"
#include "tss/instance.hpp"
#include "tss/io.hpp"
#include "tss/mhs.hpp"
#include "tss/reductions.hpp"
#include "tss/vertex_cover.hpp"

namespace py = pybind11;

namespace {

std::vector<int> to_list(const tss::VertexSet& s) { return s.members(); }

tss::ThresholdMode mode_from_name(const std::string& name) {
  if (name == "uniform") return tss::ThresholdMode::kUniformRandom;
  if (name == "constant") return tss::ThresholdMode::kConstant;
  if (name == "majority") return tss::ThresholdMode::kMajority;
  throw std::invalid_argument("unknown threshold mode '" + name +
                              "' (expected uniform, constant or majority)");
}

tss::SolveOptions make_options(bool strict_discard, bool reduce, int threads,
                               int max_cover_size,
                               const std::optional<std::vector<int>>& cover) {
  tss::SolveOptions options;
  options.strict_discard = strict_discard;
  options.reduce = reduce;
  options.threads = threads;
  options.max_cover_size = max_cover_size;
  if (cover) options.cover = tss::VertexSet(*cover);
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact and heuristic solvers for target set selection";

  py::register_exception<tss::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<tss::TssInstance>(m, "TssInstance")
      .def(py::init<int, const std::vector<std::pair<int, int>>&,
                    const std::vector<int>&>(),
           py::arg("n"), py::arg("edges"), py::arg("thresholds"))
      .def_property_readonly("vertex_count", &tss::TssInstance::vertex_count)
      .def_property_readonly("edge_count", &tss::TssInstance::edge_count)
      .def_property_readonly("edges", &tss::TssInstance::edges)
      .def_property_readonly("thresholds", &tss::TssInstance::thresholds)
      .def("degree", &tss::TssInstance::degree, py::arg("v"))
      .def("threshold", &tss::TssInstance::threshold, py::arg("v"))
      .def("neighbors",
           [](const tss::TssInstance& g, int v) {
             const auto& nb = g.neighbors(v);
             return std::vector<int>(nb.begin(), nb.end());
           },
           py::arg("v"))
      .def_property_readonly("bipartition",
           [](const tss::TssInstance& g)
               -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
             if (!g.bipartition()) return std::nullopt;
             return std::make_pair(to_list(g.bipartition()->side1),
                                   to_list(g.bipartition()->side2));
           })
      .def("__repr__", [](const tss::TssInstance& g) {
        return "TssInstance(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<tss::SetCoverInstance>(m, "SetCoverInstance")
      .def(py::init<int, const std::vector<std::vector<int>>&>(),
           py::arg("n"), py::arg("subsets"))
      .def_property_readonly("ground_size", &tss::SetCoverInstance::ground_size)
      .def_property_readonly("subsets", &tss::SetCoverInstance::subsets)
      .def_property_readonly("uncovered_elements",
                             &tss::SetCoverInstance::uncovered_elements)
      .def("__repr__", [](const tss::SetCoverInstance& sc) {
        return "SetCoverInstance(n=" + std::to_string(sc.ground_size()) +
               ", m=" + std::to_string(sc.subsets().size()) + ")";
      });

  py::class_<tss::SolveResult>(m, "SolveResult")
      .def_readonly("size", &tss::SolveResult::optimum_size)
      .def_property_readonly(
          "witness",
          [](const tss::SolveResult& r) { return to_list(r.witness); })
      .def_readonly("stats", &tss::SolveResult::stats)
      .def("__repr__", [](const tss::SolveResult& r) {
        return "SolveResult(size=" + std::to_string(r.optimum_size) + ")";
      });

  // ---- parsing and formatting -------------------------------------------
  m.def("parse_tss",
        [](const std::string& text) { return tss::parse_tss(text); },
        py::arg("text"), "parse an instance in the p/t/e line format");
  m.def("parse_setcover",
        [](const std::string& text) { return tss::parse_setcover(text); },
        py::arg("text"));
  m.def("write_tss", &tss::write_tss, py::arg("instance"));
  m.def("write_setcover", &tss::write_setcover, py::arg("instance"));
  m.def("write_result", &tss::write_result, py::arg("result"));

  // ---- diffusion ----------------------------------------------------------
  m.def("diffuse",
        [](const tss::TssInstance& g, const std::vector<int>& seed) {
          auto trace = tss::diffuse(g, tss::VertexSet(seed));
          std::vector<std::vector<int>> rounds;
          for (const auto& r : trace.rounds) rounds.push_back(to_list(r));
          return py::make_tuple(rounds, trace.timestamp);
        },
        py::arg("instance"), py::arg("seed"),
        "returns (rounds, timestamps); timestamp -1 means never activated");
  m.def("influence",
        [](const tss::TssInstance& g, const std::vector<int>& seed) {
          return to_list(tss::influence(g, tss::VertexSet(seed)));
        },
        py::arg("instance"), py::arg("seed"));
  m.def("is_target_set",
        [](const tss::TssInstance& g, const std::vector<int>& seed) {
          return tss::is_target_set(g, tss::VertexSet(seed));
        },
        py::arg("instance"), py::arg("seed"));

  // ---- vertex covers ------------------------------------------------------
  m.def("approx_vertex_cover",
        [](const tss::TssInstance& g) {
          return to_list(tss::approx_vertex_cover(g));
        },
        py::arg("instance"), "maximal-matching 2-approximation");
  m.def("exact_min_vertex_cover",
        [](const tss::TssInstance& g, int budget,
           std::uint64_t max_nodes) -> std::optional<std::vector<int>> {
          auto cover = tss::exact_min_vertex_cover(g, budget, max_nodes);
          if (!cover) return std::nullopt;
          return to_list(*cover);
        },
        py::arg("instance"), py::arg("budget"),
        py::arg("max_nodes") = UINT64_MAX,
        "smallest cover within the budget, or None");
  m.def("is_vertex_cover",
        [](const tss::TssInstance& g, const std::vector<int>& cover) {
          return tss::is_vertex_cover(g, tss::VertexSet(cover));
        },
        py::arg("instance"), py::arg("cover"));

  // ---- exact solver ---------------------------------------------------------
  m.def("solve_optimal",
        [](const tss::TssInstance& g, bool strict_discard, bool reduce,
           int threads, int max_cover_size,
           const std::optional<std::vector<int>>& cover) {
          return tss::solve_optimal(
              g, make_options(strict_discard, reduce, threads, max_cover_size,
                              cover));
        },
        py::arg("instance"), py::kw_only(), py::arg("strict_discard") = false,
        py::arg("reduce") = true, py::arg("threads") = 1,
        py::arg("max_cover_size") = 6,
        py::arg("cover") = std::nullopt,
        "minimum target set; runtime grows as (2t+1)^t in the cover size t");
  m.def("solve_decision",
        [](const tss::TssInstance& g, const std::vector<int>& cover, int k,
           bool strict_discard, bool reduce, int threads,
           int max_cover_size) -> std::optional<std::vector<int>> {
          auto witness =
              tss::solve_decision(g, tss::VertexSet(cover), k,
                                  make_options(strict_discard, reduce, threads,
                                               max_cover_size, std::nullopt));
          if (!witness) return std::nullopt;
          return to_list(*witness);
        },
        py::arg("instance"), py::arg("cover"), py::arg("k"), py::kw_only(),
        py::arg("strict_discard") = false, py::arg("reduce") = true,
        py::arg("threads") = 1, py::arg("max_cover_size") = 6,
        "witness of size <= k, or None");
  m.def("select_solver_cover",
        [](const tss::TssInstance& g) {
          return to_list(tss::select_solver_cover(g));
        },
        py::arg("instance"),
        "the vertex cover the solver would guess over by default");

  // ---- baselines -----------------------------------------------------------
  m.def("brute_force_tss",
        [](const tss::TssInstance& g, int cap) {
          return tss::brute_force_tss(g, cap);
        },
        py::arg("instance"), py::arg("cap") = 20);
  m.def("greedy_tss",
        [](const tss::TssInstance& g) { return to_list(tss::greedy_tss(g)); },
        py::arg("instance"), "marginal-gain heuristic, no quality guarantee");
  m.def("brute_force_setcover", &tss::brute_force_setcover,
        py::arg("instance"), py::arg("cap") = 20,
        "returns (size, subset indices)");
  m.def("greedy_set_cover", &tss::greedy_set_cover, py::arg("instance"),
        "subset pick order; within H_n of the optimum");

  // ---- reductions ------------------------------------------------------------
  m.def("setcover_to_tss",
        [](const tss::SetCoverInstance& sc, bool strict) {
          auto red = tss::setcover_to_tss(sc, strict);
          return py::make_tuple(red.graph, red.empty_subsets);
        },
        py::arg("instance"), py::arg("strict") = false,
        "returns (bipartite instance, indices of empty subsets)");
  m.def("subdivide_to_bipartite", &tss::subdivide_to_bipartite,
        py::arg("instance"),
        "replace each edge by a threshold-1 middle vertex");
  m.def("normalize_bipartite_solution",
        [](const tss::TssInstance& g, const std::vector<int>& witness) {
          return to_list(
              tss::normalize_bipartite_solution(g, tss::VertexSet(witness)));
        },
        py::arg("instance"), py::arg("witness"),
        "push a feasible solution onto the subset side without growing it");

  // ---- hitting sets -----------------------------------------------------------
  py::class_<tss::MhsInstance>(m, "MhsInstance")
      .def(py::init<std::vector<int>, std::vector<std::vector<int>>,
                    std::vector<int>, int>(),
           py::arg("universe"), py::arg("demand_sets"), py::arg("demands"),
           py::arg("budget"))
      .def_property_readonly("universe", &tss::MhsInstance::universe)
      .def_property_readonly("demand_sets", &tss::MhsInstance::demand_sets)
      .def_property_readonly("demands", &tss::MhsInstance::demands)
      .def_property_readonly("budget", &tss::MhsInstance::budget);
  m.def("mhs_minimize",
        [](const tss::MhsInstance& inst)
            -> std::optional<std::pair<int, std::vector<int>>> {
          auto opt = tss::mhs_minimize(inst);
          if (!opt) return std::nullopt;
          return std::make_pair(opt->size, opt->witness);
        },
        py::arg("instance"),
        "smallest multiset-demand hitting set within the budget, or None");

  // ---- generators ------------------------------------------------------------
  m.def("generate_bounded_vc",
        [](int t, int n, double density, const std::string& mode,
           int constant_c, std::uint64_t seed) {
          return tss::generate_bounded_vc(t, n, density, mode_from_name(mode),
                                          constant_c, seed);
        },
        py::arg("t"), py::arg("n"), py::arg("density") = 0.3,
        py::arg("mode") = "uniform", py::arg("constant_c") = 2,
        py::arg("seed") = 1,
        "random graph whose first t vertices form a vertex cover");
  m.def("generate_setcover", &tss::generate_setcover, py::arg("n"),
        py::arg("m"), py::arg("density") = 0.3, py::arg("seed") = 1);
}

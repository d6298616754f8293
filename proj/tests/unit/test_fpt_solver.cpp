#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tss/diffusion.hpp"
#include "tss/fpt_solver.hpp"
#include "tss/generator.hpp"
#include "tss/instance.hpp"
#include "tss/mhs.hpp"
#include "tss/vertex_cover.hpp"

using tss::GuessEnumerator;
using tss::SolveOptions;
using tss::TimestampGuess;
using tss::TssInstance;
using tss::VertexSet;

namespace {

TssInstance path3(std::vector<int> tau = {1, 1, 1}) {
  return TssInstance(3, {{0, 1}, {1, 2}}, std::move(tau));
}

// Star: center 0 with tau 3, leaves 1..3 with tau 1.
TssInstance star13() {
  return TssInstance(4, {{0, 1}, {0, 2}, {0, 3}}, {3, 1, 1, 1});
}

TssInstance random_instance(std::mt19937_64& rng, int max_t, int max_n) {
  int t = 1 + static_cast<int>(rng() % max_t);
  int n = t + 1 + static_cast<int>(rng() % (max_n - t));
  double density = 0.3 + 0.1 * static_cast<double>(rng() % 4);
  return tss::generate_bounded_vc(t, n, density,
                                  tss::ThresholdMode::kUniformRandom, 2,
                                  rng());
}

}  // namespace

TEST_CASE("guess enumeration is lexicographic with (2t+1)^t entries") {
  GuessEnumerator e0(0);
  CHECK(e0.count() == 1);
  CHECK(e0.at(0).stamps.empty());

  GuessEnumerator e1(1);
  CHECK(e1.count() == 3);
  CHECK(e1.at(0).stamps == std::vector<int>{0});
  CHECK(e1.at(1).stamps == std::vector<int>{1});
  CHECK(e1.at(2).stamps == std::vector<int>{2});

  GuessEnumerator e2(2);
  CHECK(e2.count() == 25);
  CHECK(e2.at(0).stamps == std::vector<int>{0, 0});
  CHECK(e2.at(1).stamps == std::vector<int>{0, 1});
  CHECK(e2.at(5).stamps == std::vector<int>{1, 0});
  CHECK(e2.at(24).stamps == std::vector<int>{4, 4});

  CHECK(GuessEnumerator(3).count() == 343);
}

TEST_CASE("forced-vertex peeling") {
  // isolated vertex: threshold 1 beats degree 0
  auto iso = tss::reduce_forced(TssInstance(1, {}, {1}));
  CHECK(iso.forced == VertexSet{0});
  CHECK(iso.core.vertex_count() == 0);

  // middle of a path with an unreachable threshold takes everything along
  auto mid = tss::reduce_forced(path3({1, 3, 1}));
  CHECK(mid.forced == VertexSet{1});
  CHECK(mid.core.vertex_count() == 0);

  // nothing to peel
  auto clean = tss::reduce_forced(path3());
  CHECK(clean.forced.empty());
  CHECK(clean.core.vertex_count() == 3);
  CHECK(clean.core.edge_count() == 2);
  CHECK(clean.core_to_original == std::vector<int>{0, 1, 2});

  // partial peel: endpoint 3 of a path is forced, its activation feeds
  // vertex 2 one unit of threshold discount
  TssInstance p4(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 2, 2, 5});
  auto red = tss::reduce_forced(p4);
  CHECK(red.forced == VertexSet{3});
  CHECK(red.core.vertex_count() == 3);
  CHECK(red.core.edge_count() == 2);
  CHECK(red.core.thresholds() == std::vector<int>{1, 2, 1});
  CHECK(red.core_to_original == std::vector<int>{0, 1, 2});
  REQUIRE(red.pre_activated_discount.count(2) == 1);
  CHECK(red.pre_activated_discount.at(2) == 1);
}

TEST_CASE("hitting-set construction on the path, both discard rules") {
  auto core = path3();
  VertexSet cover{1};

  // stamp 1: both endpoints land on stamp 2, demand 1 with supply {a, c}
  auto strict =
      tss::build_mhs(core, cover, TimestampGuess{{1}}, 1, /*strict=*/true);
  CHECK(!strict.has_value());

  auto relaxed = tss::build_mhs(core, cover, TimestampGuess{{1}}, 1);
  REQUIRE(relaxed.has_value());
  CHECK(relaxed->universe() == std::vector<int>{0, 2});
  CHECK(relaxed->demand_sets() == std::vector<std::vector<int>>{{0, 2}});
  CHECK(relaxed->demands() == std::vector<int>{1});
  CHECK(relaxed->budget() == 1);
  auto hit = tss::mhs_minimize(*relaxed);
  REQUIRE(hit.has_value());
  CHECK(hit->witness == std::vector<int>{0});

  // stamp 0: the cover vertex is a seed, so it demands nothing
  auto seeded = tss::build_mhs(core, cover, TimestampGuess{{0}}, 1);
  REQUIRE(seeded.has_value());
  CHECK(seeded->demands() == std::vector<int>{0});
  CHECK(seeded->demand_sets() == std::vector<std::vector<int>>{{}});
  CHECK(seeded->budget() == 0);
}

TEST_CASE("hitting-set construction on the star") {
  auto core = star13();
  VertexSet cover{0};

  // seeded center: no demand, budget spent on the seed
  auto seeded = tss::build_mhs(core, cover, TimestampGuess{{0}}, 1);
  REQUIRE(seeded.has_value());
  CHECK(seeded->demands() == std::vector<int>{0});
  CHECK(seeded->budget() == 0);
  REQUIRE(tss::mhs_minimize(*seeded).has_value());
  CHECK(tss::mhs_minimize(*seeded)->size == 0);

  // unseeded center demands all three leaves; strict drops the assignment,
  // relaxed keeps it and the DP reports infeasibility at budget 1
  auto strict =
      tss::build_mhs(core, cover, TimestampGuess{{1}}, 1, /*strict=*/true);
  CHECK(!strict.has_value());
  auto relaxed = tss::build_mhs(core, cover, TimestampGuess{{1}}, 1);
  REQUIRE(relaxed.has_value());
  CHECK(relaxed->demands() == std::vector<int>{3});
  CHECK(relaxed->demand_sets() == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(!tss::mhs_minimize(*relaxed).has_value());
}

TEST_CASE("never-firing outside vertices are committed as seeds") {
  // b can never fire on its own (tau 5, degree 1), so every assignment must
  // seed it: it is charged to the budget, dropped from the universe, and
  // counts as an early neighbor of a
  TssInstance g(2, {{0, 1}}, {1, 5});
  auto built = tss::build_mhs(g, VertexSet{0}, TimestampGuess{{1}}, 1);
  REQUIRE(built.has_value());
  CHECK(built->universe().empty());
  CHECK(built->demands() == std::vector<int>{0});
  CHECK(built->demand_sets() == std::vector<std::vector<int>>{{}});
  CHECK(built->budget() == 0);
  auto hit = tss::mhs_minimize(*built);
  REQUIRE(hit.has_value());
  CHECK(hit->witness.empty());

  // the committed seed does not fit a zero budget
  CHECK_FALSE(tss::build_mhs(g, VertexSet{0}, TimestampGuess{{1}}, 0)
                  .has_value());
}

TEST_CASE("budget overdraft discards an assignment") {
  // two stamp-0 vertices cannot fit a budget of 1
  TssInstance p2(2, {{0, 1}}, {1, 1});
  CHECK(!tss::build_mhs(p2, VertexSet{0, 1}, TimestampGuess{{0, 0}}, 1)
             .has_value());
  // with budget 2 the same assignment stays, everything already paid for
  auto kept = tss::build_mhs(p2, VertexSet{0, 1}, TimestampGuess{{0, 0}}, 2);
  REQUIRE(kept.has_value());
  CHECK(kept->budget() == 0);
}

TEST_CASE("decision queries") {
  auto g = path3();
  VertexSet cover{1};

  auto yes = tss::solve_decision(g, cover, 1);
  REQUIRE(yes.has_value());
  CHECK(yes->size() <= 1);
  CHECK(tss::is_target_set(g, *yes));

  CHECK(!tss::solve_decision(g, cover, 0).has_value());
  CHECK(!tss::solve_decision(star13(), VertexSet{0}, 0).has_value());

  CHECK_THROWS_AS(tss::solve_decision(g, cover, -1), std::invalid_argument);
  CHECK_THROWS_AS(tss::solve_decision(g, VertexSet{0}, 1),
                  std::invalid_argument);
}

TEST_CASE("optimal solves the frozen instances") {
  // all vertices forced: nothing can be influenced
  auto edgeless = tss::solve_optimal(TssInstance(3, {}, {1, 1, 1}));
  CHECK(edgeless.optimum_size == 3);
  CHECK(edgeless.witness == VertexSet{0, 1, 2});
  CHECK(edgeless.stats.at("forced") == 3);
  CHECK(edgeless.stats.at("guesses") == 1);

  auto path = tss::solve_optimal(path3());
  CHECK(path.optimum_size == 1);
  CHECK(tss::is_target_set(path3(), path.witness));
  CHECK(path.stats.at("cover") == 1);
  CHECK(path.stats.at("guesses") == 3);

  // forced vertex whose influence covers the graph
  auto forced = tss::solve_optimal(path3({1, 3, 1}));
  CHECK(forced.optimum_size == 1);
  CHECK(forced.witness == VertexSet{1});

  // forced endpoint plus one more seed
  TssInstance p4(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 2, 2, 5});
  auto two = tss::solve_optimal(p4);
  CHECK(two.optimum_size == 2);
  CHECK(two.witness == VertexSet{1, 3});

  // set-cover shaped bipartite instance: elements 0..2 with tau 1,
  // subsets {x1,x2}, {x2,x3}, {x3} as vertices 3..5 with tau = degree
  TssInstance cons(6, {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}},
                   {1, 1, 1, 2, 2, 1});
  auto best = tss::solve_optimal(cons);
  CHECK(best.optimum_size == 2);
  CHECK(tss::is_target_set(cons, best.witness));

  auto star = tss::solve_optimal(star13());
  CHECK(star.optimum_size == 1);
  CHECK(star.witness == VertexSet{0});
}

TEST_CASE("optimal matches the exhaustive oracle") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 60; ++round) {
    TssInstance g = random_instance(rng, 3, 9);
    auto [opt, seed] = oracle::min_target_set(g);

    auto result = tss::solve_optimal(g);
    CHECK(result.optimum_size == opt);
    CHECK(static_cast<int>(result.witness.size()) == opt);
    CHECK(tss::is_target_set(g, result.witness));

    // Remark-1 ceiling
    CHECK(result.optimum_size <=
          result.stats.at("cover") + result.stats.at("forced"));

    // decision agrees on both sides of the optimum
    auto cover = tss::select_solver_cover(g);
    auto yes = tss::solve_decision(g, cover, opt);
    REQUIRE(yes.has_value());
    CHECK(static_cast<int>(yes->size()) <= opt);
    CHECK(tss::is_target_set(g, *yes));
    if (opt > 0) CHECK(!tss::solve_decision(g, cover, opt - 1).has_value());
  }
}

TEST_CASE("guess accounting with a pinned cover") {
  std::mt19937_64 rng(73);
  for (int t = 1; t <= 3; ++t) {
    TssInstance g = tss::generate_bounded_vc(
        t, t + 5, 0.5, tss::ThresholdMode::kUniformRandom, 2, rng());
    std::vector<int> ids(t);
    for (int v = 0; v < t; ++v) ids[v] = v;
    SolveOptions options;
    options.cover = VertexSet(ids);
    auto result = tss::solve_optimal(g, options);

    long long expected = 1;
    for (int i = 0; i < t; ++i) expected *= 2 * t + 1;
    CHECK(result.stats.at("guesses") == expected);
    CHECK(result.stats.at("built") <= expected);
    CHECK(result.stats.at("cover") == t);
  }
}

TEST_CASE("strict discard stays sound") {
  std::mt19937_64 rng(79);
  for (int round = 0; round < 30; ++round) {
    TssInstance g = random_instance(rng, 3, 8);
    auto [opt, seed] = oracle::min_target_set(g);
    SolveOptions strict;
    strict.strict_discard = true;
    auto result = tss::solve_optimal(g, strict);
    CHECK(tss::is_target_set(g, result.witness));
    CHECK(result.optimum_size >= opt);
  }
}

TEST_CASE("identical results for any thread count") {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 10; ++round) {
    TssInstance g = random_instance(rng, 4, 12);
    SolveOptions one, four;
    one.threads = 1;
    four.threads = 4;
    auto a = tss::solve_optimal(g, one);
    auto b = tss::solve_optimal(g, four);
    CHECK(a.optimum_size == b.optimum_size);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.at("guesses") == b.stats.at("guesses"));
  }
}

TEST_CASE("reduction can be bypassed without losing the optimum") {
  std::mt19937_64 rng(89);
  for (int round = 0; round < 25; ++round) {
    TssInstance g = random_instance(rng, 2, 7);
    // push a couple of thresholds over the degree
    std::vector<int> tau = g.thresholds();
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng() % 4 == 0) tau[v] = g.degree(v) + 1 + static_cast<int>(rng() % 2);
    TssInstance bumped(g.vertex_count(), g.edges(), tau);

    auto [opt, seed] = oracle::min_target_set(bumped);
    auto reduced = tss::solve_optimal(bumped);
    CHECK(reduced.optimum_size == opt);

    SolveOptions raw;
    raw.reduce = false;
    auto direct = tss::solve_optimal(bumped, raw);
    CHECK(direct.optimum_size == opt);
    CHECK(tss::is_target_set(bumped, direct.witness));

    // peeling accounting: optimum = forced + optimum of the core
    auto red = tss::reduce_forced(bumped);
    auto core_result = tss::solve_optimal(red.core);
    CHECK(opt == static_cast<int>(red.forced.size()) +
                     core_result.optimum_size);
  }
}

TEST_CASE("timestamps of an optimal seed land inside the guessed range") {
  std::mt19937_64 rng(97);
  for (int round = 0; round < 25; ++round) {
    TssInstance g = random_instance(rng, 3, 9);
    auto [opt, seed] = oracle::min_target_set(g);
    auto cover = tss::select_solver_cover(g);
    const int t = static_cast<int>(cover.size());
    auto trace = tss::diffuse(g, VertexSet(seed));
    for (int v : cover) {
      CHECK(trace.timestamp[v] >= 0);
      CHECK(trace.timestamp[v] <= 2 * t);
    }
  }
}

TEST_CASE("guards") {
  auto g = path3();
  SolveOptions options;
  options.max_cover_size = 0;
  CHECK_THROWS_AS(tss::solve_optimal(g, options), std::runtime_error);

  SolveOptions expired;
  expired.deadline = std::chrono::steady_clock::now() -
                     std::chrono::milliseconds(10);
  CHECK_THROWS_AS(tss::solve_optimal(star13(), expired), tss::TimeoutError);

  SolveOptions bad_cover;
  bad_cover.cover = VertexSet{0};  // not a cover of the path
  CHECK_THROWS_AS(tss::solve_optimal(g, bad_cover), std::invalid_argument);
}

TEST_CASE("early exit keeps zero-cost optima") {
  SolveOptions eager;
  eager.early_exit = true;
  auto result = tss::solve_optimal(path3({1, 3, 1}), eager);
  CHECK(result.optimum_size == 1);
  CHECK(result.witness == VertexSet{1});
}

#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tss/diffusion.hpp"
#include "tss/generator.hpp"
#include "tss/instance.hpp"

using tss::ActivationTrace;
using tss::TssInstance;
using tss::VertexSet;

namespace {

// Star K_{1,3}: center 0, leaves 1..3, tau(center)=3, tau(leaf)=1.
TssInstance star13() {
  return TssInstance(4, {{0, 1}, {0, 2}, {0, 3}}, {3, 1, 1, 1});
}

// Path 0-1-2 with tau == 1.
TssInstance path3() { return TssInstance(3, {{0, 1}, {1, 2}}, {1, 1, 1}); }

std::set<int> as_set(const VertexSet& s) {
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("star activation from the center") {
  auto trace = tss::diffuse(star13(), VertexSet{0});
  REQUIRE(trace.rounds.size() == 2);
  CHECK(trace.rounds[0] == VertexSet{0});
  CHECK(trace.rounds[1] == VertexSet{1, 2, 3});
  CHECK(trace.timestamp == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("star activation from one leaf stalls") {
  auto trace = tss::diffuse(star13(), VertexSet{1});
  REQUIRE(trace.rounds.size() == 1);
  CHECK(trace.rounds[0] == VertexSet{1});
  CHECK(trace.timestamp[0] == ActivationTrace::kNever);
}

TEST_CASE("path activation sweeps left to right") {
  auto trace = tss::diffuse(path3(), VertexSet{0});
  REQUIRE(trace.rounds.size() == 3);
  CHECK(trace.rounds[0] == VertexSet{0});
  CHECK(trace.rounds[1] == VertexSet{1});
  CHECK(trace.rounds[2] == VertexSet{2});
  CHECK(trace.timestamp == std::vector<int>{0, 1, 2});
}

TEST_CASE("influence basics") {
  CHECK(tss::influence(star13(), VertexSet{0, 1, 2, 3}) ==
        VertexSet{0, 1, 2, 3});
  CHECK(tss::influence(star13(), VertexSet{}) == VertexSet{});
  CHECK(tss::influence(star13(), VertexSet{1, 2}) == VertexSet{1, 2});
}

TEST_CASE("is_target_set examples") {
  CHECK(tss::is_target_set(path3(), VertexSet{1}));
  CHECK(tss::is_target_set(star13(), VertexSet{0}));
  CHECK(!tss::is_target_set(star13(), VertexSet{1}));
}

TEST_CASE("threshold-0 vertices fire without help") {
  TssInstance g(2, {{0, 1}}, {0, 2});
  auto trace = tss::diffuse(g, VertexSet{});
  REQUIRE(trace.rounds.size() >= 2);
  CHECK(trace.rounds[1] == VertexSet{0});
  CHECK(trace.timestamp[0] == 1);
  CHECK(trace.timestamp[1] == ActivationTrace::kNever);
}

TEST_CASE("diffusion matches the set-based recurrence on random instances") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 120; ++round) {
    int t = 1 + static_cast<int>(rng() % 4);
    int n = t + 1 + static_cast<int>(rng() % 8);
    auto g = tss::generate_bounded_vc(t, n, 0.4,
                                      tss::ThresholdMode::kUniformRandom, 2,
                                      rng());
    std::set<int> seed;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) seed.insert(v);

    auto expected = oracle::rounds(g, seed);
    auto trace = tss::diffuse(g, VertexSet({seed.begin(), seed.end()}));

    // the oracle never records an empty trailing round; diffuse's round 0
    // is the seed even when empty
    REQUIRE(trace.rounds.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(as_set(trace.rounds[i]) == expected[i]);

    // monotone growth and the n+1 round ceiling
    CHECK(static_cast<int>(trace.rounds.size()) <= n + 1);
    for (std::size_t i = 1; i < trace.rounds.size(); ++i)
      CHECK(!trace.rounds[i].empty());
  }
}

TEST_CASE("seed monotonicity") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    int t = 1 + static_cast<int>(rng() % 3);
    int n = t + 2 + static_cast<int>(rng() % 6);
    auto g = tss::generate_bounded_vc(t, n, 0.5,
                                      tss::ThresholdMode::kUniformRandom, 2,
                                      rng());
    std::vector<int> small, big;
    for (int v = 0; v < n; ++v) {
      bool in_small = rng() % 4 == 0;
      if (in_small) small.push_back(v);
      if (in_small || rng() % 4 == 0) big.push_back(v);
    }
    auto inf_small = tss::influence(g, VertexSet(small));
    auto inf_big = tss::influence(g, VertexSet(big));
    CHECK(tss::set_difference(inf_small, inf_big).empty());
  }
}

TEST_CASE("DiffusionEngine agrees with influence across reuse") {
  std::mt19937_64 rng(31);
  auto g = tss::generate_bounded_vc(3, 12, 0.4,
                                    tss::ThresholdMode::kUniformRandom, 2, 9);
  tss::DiffusionEngine engine(g);
  for (int round = 0; round < 200; ++round) {
    std::vector<int> seed;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng() % 3 == 0) seed.push_back(v);
    auto reached = tss::influence(g, VertexSet(seed));
    CHECK(engine.activated_count(seed) == static_cast<int>(reached.size()));
    CHECK(engine.covers_all(seed) ==
          (static_cast<int>(reached.size()) == g.vertex_count()));
  }
}

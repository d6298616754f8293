#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "tss/generator.hpp"
#include "tss/instance.hpp"
#include "tss/vertex_cover.hpp"

using tss::ThresholdMode;
using tss::TssInstance;
using tss::VertexSet;

TEST_CASE("bounded-cover generator basics") {
  auto g = tss::generate_bounded_vc(2, 6, 0.5, ThresholdMode::kUniformRandom,
                                    2, 7);
  auto h = tss::generate_bounded_vc(2, 6, 0.5, ThresholdMode::kUniformRandom,
                                    2, 7);
  CHECK(g.edges() == h.edges());
  CHECK(g.thresholds() == h.thresholds());

  // designated cover and valid thresholds
  CHECK(tss::is_vertex_cover(g, VertexSet{0, 1}));
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK(g.degree(v) >= 1);
    CHECK(g.threshold(v) >= 1);
    CHECK(g.threshold(v) <= g.degree(v));
  }

  // edges only touch the cover
  for (auto [u, v] : g.edges()) CHECK((u < 2 || v < 2));
}

TEST_CASE("cover size zero means no edges") {
  auto g = tss::generate_bounded_vc(0, 5, 0.9, ThresholdMode::kMajority, 2, 3);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 0);
  for (int v = 0; v < 5; ++v) CHECK(g.threshold(v) == 1);
}

TEST_CASE("threshold modes") {
  auto con = tss::generate_bounded_vc(3, 10, 0.6, ThresholdMode::kConstant,
                                      2, 11);
  for (int v = 0; v < con.vertex_count(); ++v)
    CHECK(con.threshold(v) == std::min(2, std::max(1, con.degree(v))));

  auto maj = tss::generate_bounded_vc(3, 10, 0.6, ThresholdMode::kMajority,
                                      2, 11);
  for (int v = 0; v < maj.vertex_count(); ++v)
    CHECK(maj.threshold(v) == maj.degree(v) / 2 + 1);
}

TEST_CASE("generator argument validation") {
  CHECK_THROWS_AS(tss::generate_bounded_vc(5, 4, 0.5,
                                           ThresholdMode::kUniformRandom, 2, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(tss::generate_bounded_vc(1, 4, 1.5,
                                           ThresholdMode::kUniformRandom, 2, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(tss::generate_bounded_vc(1, 4, 0.5,
                                           ThresholdMode::kConstant, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("set cover generator") {
  auto sc = tss::generate_setcover(6, 4, 0.3, 13);
  auto again = tss::generate_setcover(6, 4, 0.3, 13);
  CHECK(sc.subsets() == again.subsets());
  CHECK(sc.uncovered_elements().empty());

  auto empty = tss::generate_setcover(0, 0, 0.5, 1);
  CHECK(empty.ground_size() == 0);
  CHECK(empty.subset_count() == 0);

  CHECK_THROWS_AS(tss::generate_setcover(3, 0, 0.5, 1), std::invalid_argument);
}

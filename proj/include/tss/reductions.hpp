#pragma once

// Problem transformations:
//  - set cover -> target set selection on a bipartite graph,
//  - pulling a feasible solution of such a graph back onto the subset side,
//  - edge subdivision (makes any instance bipartite, same optimum),
//  - the harmonic-factor greedy for set cover.

#include <vector>

#include "tss/instance.hpp"

namespace tss {

struct SetCoverReduction {
  TssInstance graph;
  // Indices of empty subsets: their vertices get threshold 1 (isolated,
  // threshold 0 is not a valid input) and end up in every target set.
  std::vector<int> empty_subsets;
};

// Element i -> vertex i with threshold 1; subset j -> vertex n+j with
// threshold |T_j|, adjacent to its elements.  Minimum target sets of the
// graph and minimum covers of the instance have equal size (when no subset
// is empty).  The bipartition (elements | subsets) is attached to the
// graph.  With `reject_empty_subsets`, empty subsets throw instead of
// being flagged.
SetCoverReduction setcover_to_tss(const SetCoverInstance& instance,
                                  bool reject_empty_subsets = false);

// Rewrites a feasible target set of a reduction-shaped bipartite instance
// (side1 thresholds all 1, side2 thresholds equal to degree, no isolated
// vertices) into one at most as large that lies entirely in side2 and
// touches every side1 vertex.  Side1 members of `solution` without a chosen
// neighbor are replaced by their lowest-id neighbor.  Throws if the shape
// or the feasibility precondition fails.
VertexSet normalize_bipartite_solution(const TssInstance& instance,
                                       const VertexSet& solution);

// Replaces every edge by a path of length two through a fresh vertex with
// threshold 1.  Output: n+m vertices, 2m edges, bipartite (originals |
// subdivision vertices, attached as the bipartition), same optimum size.
TssInstance subdivide_to_bipartite(const TssInstance& instance);

// Greedy set cover: repeatedly pick the subset covering the most still
// uncovered elements (ties: lowest index).  Returns the chosen indices in
// pick order.  The result is at most H_n times the optimum, H_n the n-th
// harmonic number.  Throws if some element is uncovered by every subset.
std::vector<int> greedy_set_cover(const SetCoverInstance& instance);

}  // namespace tss

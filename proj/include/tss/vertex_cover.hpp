#pragma once

// Vertex cover routines used to parameterize the exact solver.

#include <cstdint>
#include <optional>

#include "tss/instance.hpp"

namespace tss {

bool is_vertex_cover(const TssInstance& instance, const VertexSet& cover);

// Both endpoints of a greedily built maximal matching, scanning edges in
// lexicographic order.  At most twice the minimum cover size.
VertexSet approx_vertex_cover(const TssInstance& instance);

// Minimum vertex cover via a bounded search tree: branch on either endpoint
// of the first uncovered edge (lexicographic order), deepening the budget
// one unit at a time so the first hit is a true minimum.  Returns nullopt
// when the minimum exceeds `budget`, or when the search visits more than
// `max_nodes` branch nodes.  O(2^budget * m).
std::optional<VertexSet> exact_min_vertex_cover(
    const TssInstance& instance, int budget,
    std::uint64_t max_nodes = UINT64_MAX);

// Cover selection policy for the solver: take the matching approximation,
// then try to shrink it to a true minimum when the search stays small.
VertexSet select_solver_cover(const TssInstance& instance);

}  // namespace tss

#pragma once

// Reference solvers: exhaustive enumeration for cross-checking the exact
// engine, and a degree-greedy heuristic.

#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "tss/instance.hpp"

namespace tss {

// Enumerates seed sets by size, lexicographically within each size, and
// returns the first target set, which is therefore a minimum one and the
// lexicographically smallest among minimums.  Throws std::invalid_argument
// when vertex_count exceeds `cap` (the run would be 2^n activations) and
// TimeoutError past the deadline.  stats: checked, ms.
SolveResult brute_force_tss(
    const TssInstance& instance, int cap = 20,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

// Same enumeration scheme over sub-collections of subsets; returns the
// minimum cover as (size, subset indices).  Throws std::invalid_argument on
// cap excess and std::runtime_error when some element is uncoverable.
std::pair<int, std::vector<int>> brute_force_setcover(
    const SetCoverInstance& instance, int cap = 20);

// Repeatedly seeds the highest-degree vertex (ties: lowest id) that the
// current seeds do not influence yet, until everything is influenced.
// Always feasible; no optimality guarantee.
VertexSet greedy_tss(const TssInstance& instance);

}  // namespace tss

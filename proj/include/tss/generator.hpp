#pragma once

// Deterministic instance generators (same arguments + seed => identical
// output, independent of platform: all randomness comes from mt19937_64).

#include <cstdint>

#include "tss/instance.hpp"

namespace tss {

enum class ThresholdMode {
  kUniformRandom,  // tau(v) uniform in [1, max(1, deg(v))]
  kConstant,       // tau(v) = c clamped into [1, max(1, deg(v))]
  kMajority,       // tau(v) = floor(deg(v)/2) + 1
};

// Graph with a designated vertex cover {0..t-1}: every edge touches it, so
// the minimum vertex cover has size <= t.  Candidate edges are drawn
// independently with probability `edge_density`; afterwards every vertex is
// given at least one incident edge (when t >= 1 and n >= 2), which keeps
// all thresholds satisfiable within [1, deg].  t = 0 produces the edgeless
// graph with all thresholds 1.
TssInstance generate_bounded_vc(int t, int n, double edge_density,
                                ThresholdMode mode, int constant_c,
                                std::uint64_t seed);

// Each subset receives each element with probability `density`; uncovered
// elements are then added to a random subset so the instance is feasible.
SetCoverInstance generate_setcover(int n, int m, double density,
                                   std::uint64_t seed);

}  // namespace tss

#pragma once

// Threshold activation process.  Starting from a seed set (round 0), a
// vertex activates in round i as soon as at least threshold(v) of its
// neighbors were active after round i-1.  Vertices with threshold 0 (which
// only internal reductions produce) activate in round 1 unconditionally.
// The process is monotone and runs in O(n + m): each edge is charged once
// per endpoint activation.

#include <span>

#include "tss/instance.hpp"

namespace tss {

ActivationTrace diffuse(const TssInstance& instance, const VertexSet& seed);

// Union of all rounds; the set of vertices the seed eventually activates.
VertexSet influence(const TssInstance& instance, const VertexSet& seed);

bool is_target_set(const TssInstance& instance, const VertexSet& seed);

// Re-usable simulator for callers that run many seeds against one
// instance; avoids reallocating the per-vertex bookkeeping every call.
class DiffusionEngine {
 public:
  explicit DiffusionEngine(const TssInstance& instance);

  // Number of vertices the seed activates (seed included).
  int activated_count(std::span<const int> seed);
  bool covers_all(std::span<const int> seed);

 private:
  const TssInstance& instance_;
  std::vector<int> met_;      // active-neighbor counters
  std::vector<char> active_;
  std::vector<int> frontier_, next_, touched_;
};

}  // namespace tss

#pragma once

// Core data model: graphs with activation thresholds, vertex sets,
// set cover instances, activation traces and solver results.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tss {

// Set of vertex ids kept sorted and duplicate-free.  Membership is a binary
// search; iteration is always in ascending id order, which keeps every
// consumer deterministic.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);
  VertexSet(std::initializer_list<int> members);

  bool contains(int v) const;
  void insert(int v);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }

  std::vector<int>::const_iterator begin() const { return members_.begin(); }
  std::vector<int>::const_iterator end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;  // sorted ascending, unique
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

// Optional two-sided vertex labelling carried by instances produced from
// set cover reductions and edge subdivision.  Sides are disjoint and
// together cover every vertex.
struct Bipartition {
  VertexSet side1;
  VertexSet side2;
};

// Undirected simple graph with one activation threshold per vertex.
// Immutable once constructed; the constructor validates the shape and
// builds the adjacency structure.  Thresholds from external input are
// >= 1; instances produced by internal reductions may carry threshold 0.
class TssInstance {
 public:
  TssInstance() = default;
  TssInstance(int vertex_count, std::vector<std::pair<int, int>> edges,
              std::vector<int> thresholds,
              std::optional<Bipartition> bipartition = std::nullopt);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edges normalized to u < v and sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int threshold(int v) const { return thresholds_[v]; }
  const std::vector<int>& thresholds() const { return thresholds_; }

  std::span<const int> neighbors(int v) const;
  int degree(int v) const;

  const std::optional<Bipartition>& bipartition() const { return bipartition_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> thresholds_;
  std::vector<int> adj_offsets_;  // CSR offsets, size n+1
  std::vector<int> adj_;          // neighbor lists, each sorted
  std::optional<Bipartition> bipartition_;
};

// Result of running the activation process from a seed set.
// rounds[0] is the seed itself; rounds[i] for i >= 1 holds the vertices
// that activate in round i and is never empty (the process stops once a
// round activates nothing).  timestamp[v] is the round in which v became
// active, or kNever.
struct ActivationTrace {
  static constexpr int kNever = -1;

  std::vector<VertexSet> rounds;
  std::vector<int> timestamp;
};

// Ground set {0..n-1} plus a list of subsets.  Subsets may repeat and may
// be empty; feasibility (every element covered by some subset) is a query,
// not a construction invariant.
class SetCoverInstance {
 public:
  SetCoverInstance() = default;
  SetCoverInstance(int ground_size, std::vector<std::vector<int>> subsets);

  int ground_size() const { return ground_size_; }
  int subset_count() const { return static_cast<int>(subsets_.size()); }
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }

  // Elements that appear in no subset (non-empty means infeasible).
  std::vector<int> uncovered_elements() const;

 private:
  int ground_size_ = 0;
  std::vector<std::vector<int>> subsets_;  // each sorted, unique
};

// Outcome of an exact or heuristic solve.  stats carries engine counters
// (guess counts, DP cells, wall time, ...) keyed by short names; std::map
// keeps the serialization order alphabetical.
struct SolveResult {
  int optimum_size = 0;
  VertexSet witness;
  std::map<std::string, long long> stats;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

}  // namespace tss

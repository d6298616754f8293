#include "tss/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tss/diffusion.hpp"

namespace tss {

SetCoverReduction setcover_to_tss(const SetCoverInstance& instance,
                                  bool reject_empty_subsets) {
  const int n = instance.ground_size();
  const int m = instance.subset_count();

  std::vector<std::pair<int, int>> edges;
  std::vector<int> thresholds(n + m, 1);  // element side all-ones
  std::vector<int> empty_subsets;
  for (int j = 0; j < m; ++j) {
    const auto& subset = instance.subsets()[j];
    if (subset.empty()) {
      if (reject_empty_subsets)
        throw std::invalid_argument("subset " + std::to_string(j + 1) + " is empty");
      empty_subsets.push_back(j);
      thresholds[n + j] = 1;  // isolated; forced into every target set
      continue;
    }
    thresholds[n + j] = static_cast<int>(subset.size());
    for (int e : subset) edges.emplace_back(e, n + j);
  }

  std::vector<int> elements(n), subsets(m);
  for (int i = 0; i < n; ++i) elements[i] = i;
  for (int j = 0; j < m; ++j) subsets[j] = n + j;
  Bipartition bip{VertexSet(std::move(elements)), VertexSet(std::move(subsets))};

  return SetCoverReduction{TssInstance(n + m, std::move(edges), std::move(thresholds),
                                       std::move(bip)),
                           std::move(empty_subsets)};
}

VertexSet normalize_bipartite_solution(const TssInstance& instance,
                                       const VertexSet& solution) {
  if (!instance.bipartition())
    throw std::invalid_argument("instance carries no bipartition");
  const auto& side1 = instance.bipartition()->side1;
  const auto& side2 = instance.bipartition()->side2;
  for (int v : side1)
    if (instance.threshold(v) != 1)
      throw std::invalid_argument("side-1 thresholds must all be 1");
  for (int v : side2)
    if (instance.threshold(v) != instance.degree(v))
      throw std::invalid_argument("side-2 thresholds must equal the degree");
  for (int v = 0; v < instance.vertex_count(); ++v)
    if (instance.degree(v) == 0)
      throw std::invalid_argument("instance must have no isolated vertices");
  if (!is_target_set(instance, solution))
    throw std::invalid_argument("solution is not a feasible target set");

  VertexSet normalized = set_intersection(solution, side2);
  for (int u : set_intersection(solution, side1)) {
    bool served = false;
    for (int w : instance.neighbors(u))
      if (normalized.contains(w)) {
        served = true;
        break;
      }
    if (!served) normalized.insert(instance.neighbors(u).front());
  }
  return normalized;
}

TssInstance subdivide_to_bipartite(const TssInstance& instance) {
  const int n = instance.vertex_count();
  const int m = instance.edge_count();

  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * static_cast<std::size_t>(m));
  std::vector<int> thresholds(instance.thresholds());
  thresholds.resize(n + m, 1);
  for (int e = 0; e < m; ++e) {
    const auto& [u, v] = instance.edges()[e];
    edges.emplace_back(u, n + e);
    edges.emplace_back(v, n + e);
  }

  std::vector<int> originals(n), fresh(m);
  for (int v = 0; v < n; ++v) originals[v] = v;
  for (int e = 0; e < m; ++e) fresh[e] = n + e;
  Bipartition bip{VertexSet(std::move(originals)), VertexSet(std::move(fresh))};

  return TssInstance(n + m, std::move(edges), std::move(thresholds), std::move(bip));
}

std::vector<int> greedy_set_cover(const SetCoverInstance& instance) {
  if (!instance.uncovered_elements().empty())
    throw std::invalid_argument("instance is infeasible: some element is in no subset");

  std::vector<char> covered(instance.ground_size(), 0);
  int remaining = instance.ground_size();
  std::vector<int> picks;
  while (remaining > 0) {
    int best = -1, best_gain = 0;
    for (int j = 0; j < instance.subset_count(); ++j) {
      int gain = 0;
      for (int e : instance.subsets()[j])
        if (!covered[e]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = j;
      }
    }
    picks.push_back(best);
    for (int e : instance.subsets()[best])
      if (!covered[e]) {
        covered[e] = 1;
        --remaining;
      }
  }
  return picks;
}

}  // namespace tss

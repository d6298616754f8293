#include "tss/vertex_cover.hpp"

#include <algorithm>

namespace tss {

bool is_vertex_cover(const TssInstance& instance, const VertexSet& cover) {
  for (const auto& [u, v] : instance.edges())
    if (!cover.contains(u) && !cover.contains(v)) return false;
  return true;
}

VertexSet approx_vertex_cover(const TssInstance& instance) {
  std::vector<char> matched(instance.vertex_count(), 0);
  std::vector<int> cover;
  for (const auto& [u, v] : instance.edges())
    if (!matched[u] && !matched[v]) {
      matched[u] = matched[v] = 1;
      cover.push_back(u);
      cover.push_back(v);
    }
  return VertexSet(std::move(cover));
}

namespace {

struct CoverSearch {
  const std::vector<std::pair<int, int>>& edges;
  std::vector<char> chosen;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;

  // True if a cover of size <= budget extends `chosen`; fills it in place.
  // Returns false on both "no such cover" and "node limit hit"; the caller
  // distinguishes via the exhausted flag.
  bool exhausted = false;

  bool search(std::size_t edge_from, int budget) {
    if (++nodes > max_nodes) {
      exhausted = true;
      return false;
    }
    std::size_t i = edge_from;
    while (i < edges.size() && (chosen[edges[i].first] || chosen[edges[i].second])) ++i;
    if (i == edges.size()) return true;
    if (budget == 0) return false;
    auto [u, v] = edges[i];
    chosen[u] = 1;
    if (search(i + 1, budget - 1)) return true;
    chosen[u] = 0;
    if (exhausted) return false;
    chosen[v] = 1;
    if (search(i + 1, budget - 1)) return true;
    chosen[v] = 0;
    return false;
  }
};

}  // namespace

std::optional<VertexSet> exact_min_vertex_cover(const TssInstance& instance,
                                                int budget,
                                                std::uint64_t max_nodes) {
  if (budget < 0) return std::nullopt;
  CoverSearch search{instance.edges(), {}, 0, max_nodes, false};
  for (int k = 0; k <= budget; ++k) {
    search.chosen.assign(instance.vertex_count(), 0);
    if (search.search(0, k)) {
      std::vector<int> cover;
      for (int v = 0; v < instance.vertex_count(); ++v)
        if (search.chosen[v]) cover.push_back(v);
      return VertexSet(std::move(cover));
    }
    if (search.exhausted) return std::nullopt;
  }
  return std::nullopt;
}

VertexSet select_solver_cover(const TssInstance& instance) {
  VertexSet approx = approx_vertex_cover(instance);
  // 2^22 branch nodes keeps the worst case around a second; beyond that the
  // doubled parameter from the approximation is the lesser evil.
  constexpr int kBudgetLimit = 22;
  constexpr std::uint64_t kNodeLimit = 1ull << 22;
  if (static_cast<int>(approx.size()) <= kBudgetLimit)
    if (auto exact = exact_min_vertex_cover(
            instance, static_cast<int>(approx.size()), kNodeLimit))
      return *exact;
  return approx;
}

}  // namespace tss

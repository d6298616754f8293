#include "tss/generator.hpp"

#include <random>
#include <stdexcept>

namespace tss {

TssInstance generate_bounded_vc(int t, int n, double edge_density,
                                ThresholdMode mode, int constant_c,
                                std::uint64_t seed) {
  if (t < 0 || n < 0 || t > n)
    throw std::invalid_argument("need 0 <= t <= n");
  if (edge_density < 0.0 || edge_density > 1.0)
    throw std::invalid_argument("edge density must lie in [0, 1]");
  if (mode == ThresholdMode::kConstant && constant_c < 1)
    throw std::invalid_argument("constant threshold must be >= 1");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution draw(edge_density);

  // Only pairs touching the designated cover {0..t-1} are eligible.
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  std::vector<int> degree(n, 0);
  auto add_edge = [&](int u, int v) {
    present[u][v] = present[v][u] = 1;
    ++degree[u];
    ++degree[v];
  };
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < n; ++j)
      if (draw(rng)) add_edge(i, j);

  // Leave no vertex isolated (impossible thresholds otherwise): outsiders
  // attach to a random cover vertex, an isolated cover vertex to a random
  // other vertex.
  if (t >= 1) {
    for (int v = t; v < n; ++v)
      if (degree[v] == 0)
        add_edge(static_cast<int>(rng() % t), v);
    for (int v = 0; v < t && n >= 2; ++v)
      if (degree[v] == 0) {
        int other = static_cast<int>(rng() % (n - 1));
        if (other >= v) ++other;
        add_edge(v, other);
      }
  }

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (present[u][v]) edges.emplace_back(u, v);

  std::vector<int> thresholds(n, 1);
  for (int v = 0; v < n; ++v) {
    const int d = std::max(1, degree[v]);
    switch (mode) {
      case ThresholdMode::kUniformRandom:
        thresholds[v] = 1 + static_cast<int>(rng() % d);
        break;
      case ThresholdMode::kConstant:
        thresholds[v] = std::min(constant_c, d);
        break;
      case ThresholdMode::kMajority:
        thresholds[v] = degree[v] / 2 + 1;
        break;
    }
  }

  return TssInstance(n, std::move(edges), std::move(thresholds));
}

SetCoverInstance generate_setcover(int n, int m, double density,
                                   std::uint64_t seed) {
  if (n < 0 || m < 0) throw std::invalid_argument("counts must be non-negative");
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("density must lie in [0, 1]");
  if (n > 0 && m == 0)
    throw std::invalid_argument("cannot cover a non-empty ground set with no subsets");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution draw(density);

  std::vector<std::vector<char>> member(m, std::vector<char>(n, 0));
  for (int j = 0; j < m; ++j)
    for (int e = 0; e < n; ++e)
      if (draw(rng)) member[j][e] = 1;

  for (int e = 0; e < n; ++e) {
    bool covered = false;
    for (int j = 0; j < m && !covered; ++j) covered = member[j][e];
    if (!covered) member[rng() % m][e] = 1;
  }

  std::vector<std::vector<int>> subsets(m);
  for (int j = 0; j < m; ++j)
    for (int e = 0; e < n; ++e)
      if (member[j][e]) subsets[j].push_back(e);
  return SetCoverInstance(n, std::move(subsets));
}

}  // namespace tss

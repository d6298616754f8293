#include "tss/baseline.hpp"

#include <algorithm>
#include <stdexcept>

#include "tss/diffusion.hpp"
#include "tss/fpt_solver.hpp"

namespace tss {

namespace {

// Lexicographic successor of a size-k index combination out of n; false
// once the last combination was reached.
bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i)
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  return false;
}

}  // namespace

SolveResult brute_force_tss(
    const TssInstance& instance, int cap,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  const int n = instance.vertex_count();
  if (n > cap)
    throw std::invalid_argument("instance above the exhaustive-search cap of " +
                                std::to_string(cap) + " vertices");

  const auto start = std::chrono::steady_clock::now();
  DiffusionEngine engine(instance);
  long long checked = 0;

  auto finish = [&](std::vector<int> seed) {
    SolveResult result;
    result.witness = VertexSet(std::move(seed));
    result.optimum_size = static_cast<int>(result.witness.size());
    const auto elapsed = std::chrono::steady_clock::now() - start;
    result.stats = {
        {"checked", checked},
        {"ms",
         std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()},
    };
    return result;
  };

  for (int k = 0; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      if (deadline && (checked & 255) == 0 &&
          std::chrono::steady_clock::now() > *deadline)
        throw TimeoutError();
      ++checked;
      if (engine.covers_all(comb)) return finish(comb);
      if (k == 0 || !next_combination(comb, n)) break;
    }
  }
  throw std::logic_error("the full vertex set must be a target set");
}

std::pair<int, std::vector<int>> brute_force_setcover(
    const SetCoverInstance& instance, int cap) {
  const int m = instance.subset_count();
  if (m > cap)
    throw std::invalid_argument("instance above the exhaustive-search cap of " +
                                std::to_string(cap) + " subsets");
  if (!instance.uncovered_elements().empty())
    throw std::runtime_error("instance is infeasible: some element is in no subset");

  const int n = instance.ground_size();
  std::vector<char> covered(n);
  auto covers_all = [&](const std::vector<int>& picks) {
    std::fill(covered.begin(), covered.end(), 0);
    int seen = 0;
    for (int j : picks)
      for (int e : instance.subsets()[j])
        if (!covered[e]) {
          covered[e] = 1;
          ++seen;
        }
    return seen == n;
  };

  for (int k = 0; k <= m; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      if (covers_all(comb)) return {k, comb};
      if (k == 0 || !next_combination(comb, m)) break;
    }
  }
  throw std::logic_error("the full collection must be a cover");
}

VertexSet greedy_tss(const TssInstance& instance) {
  VertexSet seeds;
  while (true) {
    VertexSet reached = influence(instance, seeds);
    if (static_cast<int>(reached.size()) == instance.vertex_count()) return seeds;
    int pick = -1;
    for (int v = 0; v < instance.vertex_count(); ++v)
      if (!reached.contains(v) && (pick < 0 || instance.degree(v) > instance.degree(pick)))
        pick = v;
    seeds.insert(pick);
  }
}

}  // namespace tss

#pragma once

// Hitting set with multiplicity demands: given subsets S_1..S_t of a
// universe U, demands l_1..l_t and a budget q, find H (|H| <= q) with
// |H inter S_i| >= l_i for every i.
//
// Solved by a layered DP over the universe in its given order.  A cell
// (q', l'_1..l'_t) of layer j is present iff the instance restricted to the
// first j elements, budget q' and demands l' is feasible:
//
//   layer 0:   present iff every l'_i = 0 (the empty set works)
//   layer j:   keep the layer j-1 cell if present (element u_j not taken),
//              else try (q'-1, l' decremented on every S_i containing u_j,
//              saturating at 0) and take u_j.
//
// Preferring "not taken" makes the reconstructed witness lexicographically
// smallest under the universe order.  Only two presence layers live at a
// time; one bit per (layer, cell) remembers the take/skip choice so the
// witness can be walked back.  A layer holds (q+1) * prod(l_i + 1) cells.

#include <cstdint>
#include <optional>
#include <vector>

#include "tss/instance.hpp"

namespace tss {

class MhsInstance {
 public:
  // `enforce_demand_bound` rejects demands above the number of sets, the
  // normal contract for externally supplied instances.  The solver builds
  // instances whose demands may legitimately exceed it.
  MhsInstance(std::vector<int> universe, std::vector<std::vector<int>> demand_sets,
              std::vector<int> demands, int budget,
              bool enforce_demand_bound = true);

  const std::vector<int>& universe() const { return universe_; }
  const std::vector<std::vector<int>>& demand_sets() const { return demand_sets_; }
  const std::vector<int>& demands() const { return demands_; }
  int budget() const { return budget_; }
  int set_count() const { return static_cast<int>(demand_sets_.size()); }

 private:
  std::vector<int> universe_;                  // ordered, distinct element ids
  std::vector<std::vector<int>> demand_sets_;  // sorted members, subsets of universe
  std::vector<int> demands_;                   // one per set, >= 0
  int budget_ = 0;
};

struct MhsStats {
  long long cells_per_layer = 0;  // DP table width
  long long cells_filled = 0;     // present cells summed over layers
};

// Witness with |H| <= budget meeting every demand, or nullopt.  Elements are
// reported in universe order.
std::optional<std::vector<int>> mhs_decide(const MhsInstance& instance,
                                           MhsStats* stats = nullptr);

struct MhsOptimum {
  int size = 0;
  std::vector<int> witness;
};

// Smallest feasible hitting set within the budget: the final layer is read
// at increasing q' until a present cell appears.
std::optional<MhsOptimum> mhs_minimize(const MhsInstance& instance,
                                       MhsStats* stats = nullptr);

// Full presence table for debugging and tests: present[j][cell] for layers
// j = 0..|U|.  Cell index = q' * stride_q + sum l'_i * stride_i, with the
// demand dimensions varying fastest in reverse set order.
struct MhsTable {
  long long cells_per_layer = 0;
  std::vector<long long> strides;  // budget stride first, then one per set
  std::vector<std::vector<char>> present;
};

MhsTable mhs_debug_table(const MhsInstance& instance);

}  // namespace tss

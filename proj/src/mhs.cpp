#include "tss/mhs.hpp"

#include <algorithm>
#include <stdexcept>

namespace tss {

MhsInstance::MhsInstance(std::vector<int> universe,
                         std::vector<std::vector<int>> demand_sets,
                         std::vector<int> demands, int budget,
                         bool enforce_demand_bound)
    : universe_(std::move(universe)),
      demand_sets_(std::move(demand_sets)),
      demands_(std::move(demands)),
      budget_(budget) {
  std::vector<int> sorted = universe_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("universe elements must be distinct");
  if (demand_sets_.size() != demands_.size())
    throw std::invalid_argument("expected one demand per demand set");
  if (budget_ < 0) throw std::invalid_argument("budget must be non-negative");

  const int t = set_count();
  for (auto& s : demand_sets_) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("demand set members must be distinct");
    for (int e : s)
      if (!std::binary_search(sorted.begin(), sorted.end(), e))
        throw std::invalid_argument("demand set member outside the universe");
  }
  for (int l : demands_) {
    if (l < 0) throw std::invalid_argument("demands must be non-negative");
    if (enforce_demand_bound && l > t)
      throw std::invalid_argument("demand exceeds the number of demand sets");
  }
}

namespace {

struct DpLayout {
  long long cells = 0;
  std::vector<long long> strides;            // budget stride, then one per set
  std::vector<std::vector<int>> sets_of;     // universe position -> set indices
};

// Budget dimension slowest, demand dimensions in set order, last fastest.
DpLayout make_layout(const MhsInstance& inst) {
  const int t = inst.set_count();
  DpLayout layout;
  layout.strides.assign(t + 1, 1);
  long long cells = 1;
  constexpr long long kMaxCells = 1ll << 26;  // resource guard, ~64M cells
  for (int i = t - 1; i >= 0; --i) {
    layout.strides[1 + i] = cells;
    cells *= inst.demands()[i] + 1;
    if (cells > kMaxCells) throw std::length_error("hitting set DP table too large");
  }
  layout.strides[0] = cells;
  cells *= inst.budget() + 1;
  if (cells > kMaxCells) throw std::length_error("hitting set DP table too large");
  layout.cells = cells;

  layout.sets_of.resize(inst.universe().size());
  std::vector<int> pos_of;  // element id -> universe position, via sorted lookup
  {
    const auto& u = inst.universe();
    std::vector<std::pair<int, int>> order(u.size());
    for (std::size_t p = 0; p < u.size(); ++p) order[p] = {u[p], static_cast<int>(p)};
    std::sort(order.begin(), order.end());
    for (int i = 0; i < inst.set_count(); ++i)
      for (int e : inst.demand_sets()[i]) {
        auto it = std::lower_bound(order.begin(), order.end(), std::pair{e, 0});
        layout.sets_of[it->second].push_back(i);
      }
  }
  return layout;
}

struct DpRun {
  DpLayout layout;
  std::vector<char> final_layer;
  std::vector<std::vector<bool>> taken;  // [universe position][cell]
  long long cells_filled = 0;
  // Per-layer presence kept only when dump is requested.
  std::vector<std::vector<char>> all_layers;
};

DpRun run_dp(const MhsInstance& inst, bool keep_layers) {
  DpRun run{make_layout(inst), {}, {}, 0, {}};
  const auto& layout = run.layout;
  const int t = inst.set_count();
  const std::size_t n = inst.universe().size();
  const long long cells = layout.cells;

  std::vector<char> prev(cells, 0), cur;
  for (int q = 0; q <= inst.budget(); ++q) prev[q * layout.strides[0]] = 1;
  run.cells_filled += inst.budget() + 1;
  if (keep_layers) run.all_layers.push_back(prev);

  run.taken.assign(n, {});
  std::vector<int> digits(t + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& affected = layout.sets_of[j];
    cur.assign(cells, 0);
    run.taken[j].assign(cells, false);
    std::fill(digits.begin(), digits.end(), 0);
    for (long long idx = 0; idx < cells; ++idx) {
      if (prev[idx]) {
        cur[idx] = 1;
        ++run.cells_filled;
      } else if (digits[0] > 0) {
        long long src = idx - layout.strides[0];
        for (int i : affected)
          if (digits[1 + i] > 0) src -= layout.strides[1 + i];
        if (prev[src]) {
          cur[idx] = 1;
          run.taken[j][idx] = true;
          ++run.cells_filled;
        }
      }
      // odometer: advance the mixed-radix digits alongside idx
      for (int d = t; d >= 0; --d) {
        int radix = (d == 0) ? inst.budget() + 1 : inst.demands()[d - 1] + 1;
        if (++digits[d] < radix) break;
        digits[d] = 0;
      }
    }
    std::swap(prev, cur);
    if (keep_layers) run.all_layers.push_back(prev);
  }
  run.final_layer = std::move(prev);
  return run;
}

std::vector<int> reconstruct(const MhsInstance& inst, const DpRun& run,
                             long long idx) {
  const auto& layout = run.layout;
  const int t = inst.set_count();
  std::vector<int> digits(t + 1, 0);
  {
    long long rest = idx;
    for (int d = 0; d <= t; ++d) {
      digits[d] = static_cast<int>(rest / layout.strides[d]);
      rest %= layout.strides[d];
    }
  }
  std::vector<int> witness;
  for (std::size_t j = inst.universe().size(); j-- > 0;) {
    if (!run.taken[j][idx]) continue;
    witness.push_back(inst.universe()[j]);
    idx -= layout.strides[0];
    --digits[0];
    for (int i : layout.sets_of[j])
      if (digits[1 + i] > 0) {
        idx -= layout.strides[1 + i];
        --digits[1 + i];
      }
  }
  std::reverse(witness.begin(), witness.end());
  return witness;
}

// Exact infeasibility screen: no H with |H| <= q can hit S_i more than
// min(q, |S_i|) times, so such demands need no table at all.  This keeps
// solver-built instances with oversized demands cheap.
bool trivially_infeasible(const MhsInstance& inst) {
  for (int i = 0; i < inst.set_count(); ++i) {
    long long cap = std::min<long long>(inst.budget(), inst.demand_sets()[i].size());
    if (inst.demands()[i] > cap) return true;
  }
  return false;
}

long long full_demand_cell(const MhsInstance& inst, const DpLayout& layout, int q) {
  long long idx = q * layout.strides[0];
  for (int i = 0; i < inst.set_count(); ++i)
    idx += static_cast<long long>(inst.demands()[i]) * layout.strides[1 + i];
  return idx;
}

}  // namespace

std::optional<std::vector<int>> mhs_decide(const MhsInstance& instance,
                                           MhsStats* stats) {
  if (stats) *stats = {};
  if (trivially_infeasible(instance)) return std::nullopt;
  DpRun run = run_dp(instance, false);
  if (stats) {
    stats->cells_per_layer = run.layout.cells;
    stats->cells_filled = run.cells_filled;
  }
  long long cell = full_demand_cell(instance, run.layout, instance.budget());
  if (!run.final_layer[cell]) return std::nullopt;
  return reconstruct(instance, run, cell);
}

std::optional<MhsOptimum> mhs_minimize(const MhsInstance& instance,
                                       MhsStats* stats) {
  if (stats) *stats = {};
  if (trivially_infeasible(instance)) return std::nullopt;
  DpRun run = run_dp(instance, false);
  if (stats) {
    stats->cells_per_layer = run.layout.cells;
    stats->cells_filled = run.cells_filled;
  }
  for (int q = 0; q <= instance.budget(); ++q) {
    long long cell = full_demand_cell(instance, run.layout, q);
    if (run.final_layer[cell]) {
      std::vector<int> witness = reconstruct(instance, run, cell);
      return MhsOptimum{static_cast<int>(witness.size()), std::move(witness)};
    }
  }
  return std::nullopt;
}

MhsTable mhs_debug_table(const MhsInstance& instance) {
  DpRun run = run_dp(instance, true);
  return MhsTable{run.layout.cells, run.layout.strides, std::move(run.all_layers)};
}

}  // namespace tss

#include "tss/fpt_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include "tss/diffusion.hpp"
#include "tss/vertex_cover.hpp"

namespace tss {

GuessEnumerator::GuessEnumerator(int t) : t_(t), count_(1) {
  if (t < 0) throw std::invalid_argument("cover size must be non-negative");
  const std::uint64_t radix = 2 * static_cast<std::uint64_t>(t) + 1;
  for (int i = 0; i < t; ++i) {
    if (count_ > std::numeric_limits<std::uint64_t>::max() / radix)
      throw std::overflow_error("guess space too large to enumerate");
    count_ *= radix;
  }
}

TimestampGuess GuessEnumerator::at(std::uint64_t index) const {
  TimestampGuess guess;
  guess.stamps.assign(t_, 0);
  const std::uint64_t radix = 2 * static_cast<std::uint64_t>(t_) + 1;
  for (int i = t_ - 1; i >= 0; --i) {
    guess.stamps[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  return guess;
}

ReducedInstance reduce_forced(const TssInstance& instance) {
  const int n = instance.vertex_count();

  // A vertex with threshold above degree cannot fire via neighbors, so it
  // sits in every target set.  Peeling is a single pass: removing the
  // activated closure lowers a survivor's threshold and degree by the same
  // amount, so no new forced vertices appear.
  std::vector<int> forced_ids;
  for (int v = 0; v < n; ++v)
    if (instance.threshold(v) > instance.degree(v)) forced_ids.push_back(v);
  VertexSet forced(std::move(forced_ids));
  VertexSet active = influence(instance, forced);

  std::vector<int> orig_of;
  std::vector<int> core_of(n, -1);
  for (int v = 0; v < n; ++v)
    if (!active.contains(v)) {
      core_of[v] = static_cast<int>(orig_of.size());
      orig_of.push_back(v);
    }

  std::map<int, int> discount;
  std::vector<int> thresholds(orig_of.size());
  for (std::size_t i = 0; i < orig_of.size(); ++i) {
    const int v = orig_of[i];
    int met = 0;
    for (int w : instance.neighbors(v))
      if (active.contains(w)) ++met;
    if (met > 0) discount[v] = met;
    thresholds[i] = instance.threshold(v) - met;
  }

  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : instance.edges())
    if (core_of[u] >= 0 && core_of[v] >= 0)
      edges.emplace_back(core_of[u], core_of[v]);

  ReducedInstance out{TssInstance(static_cast<int>(orig_of.size()), std::move(edges),
                                  std::move(thresholds)),
                      std::move(forced), std::move(orig_of), std::move(discount)};
  for (int v = 0; v < out.core.vertex_count(); ++v)
    if (out.core.threshold(v) > out.core.degree(v) || out.core.threshold(v) < 1)
      throw std::logic_error("forced-vertex peeling did not reach a fixpoint");
  return out;
}

std::optional<MhsInstance> build_mhs(const TssInstance& core, const VertexSet& cover,
                                     const TimestampGuess& guess, int k,
                                     bool strict_discard) {
  const int n = core.vertex_count();
  const int t = static_cast<int>(cover.size());

  std::vector<int> stamp(n, kUnreachableStamp);
  int seeded = 0;
  for (int i = 0; i < t; ++i) {
    stamp[cover.members()[i]] = guess.stamps[i];
    if (guess.stamps[i] == 0) ++seeded;
  }

  // Outside the cover every neighborhood lies inside it, so the guess fixes
  // each outside vertex's activation round: one past the round in which its
  // threshold-th neighbor stamp is reached.  A vertex whose threshold tops
  // its degree can only ever activate by being seeded, and it belongs to
  // every target set: commit it as a seed (stamp 0, charged to the budget)
  // instead of offering it to the hitting set.
  std::vector<char> in_cover(n, 0);
  for (int v : cover) in_cover[v] = 1;
  std::vector<int> universe;
  std::vector<int> nbr_stamps;
  for (int u = 0; u < n; ++u) {
    if (in_cover[u]) continue;
    const int tau = core.threshold(u);
    if (tau > core.degree(u)) {
      stamp[u] = 0;
      ++seeded;
      continue;
    }
    universe.push_back(u);
    if (tau == 0) {
      stamp[u] = 1;
      continue;
    }
    nbr_stamps.assign(core.neighbors(u).begin(), core.neighbors(u).end());
    for (int& s : nbr_stamps) s = stamp[s];
    std::nth_element(nbr_stamps.begin(), nbr_stamps.begin() + (tau - 1),
                     nbr_stamps.end());
    stamp[u] = 1 + nbr_stamps[tau - 1];
  }
  const int budget = k - seeded;
  if (budget < 0) return std::nullopt;

  std::vector<std::vector<int>> demand_sets(t);
  std::vector<int> demands(t, 0);
  for (int i = 0; i < t; ++i) {
    const int v = cover.members()[i];
    const int r = guess.stamps[i];
    if (r == 0) continue;  // seeded cover vertices demand nothing
    int earlier = 0;
    for (int w : core.neighbors(v)) {
      if (stamp[w] < r) ++earlier;
      if (!in_cover[w] && stamp[w] >= r) demand_sets[i].push_back(w);
    }
    demands[i] = std::max(0, core.threshold(v) - earlier);
    if (strict_discard) {
      if (demands[i] >= t) return std::nullopt;
    } else {
      if (demands[i] > static_cast<int>(demand_sets[i].size())) return std::nullopt;
    }
  }

  return MhsInstance(std::move(universe), std::move(demand_sets), std::move(demands),
                     budget, /*enforce_demand_bound=*/false);
}

namespace {

ReducedInstance passthrough(const TssInstance& instance) {
  std::vector<int> identity(instance.vertex_count());
  std::iota(identity.begin(), identity.end(), 0);
  return ReducedInstance{instance, VertexSet{}, std::move(identity), {}};
}

// Outside-the-cover vertices that can never fire (threshold above degree).
// They sit in every target set; build_mhs charges them to the budget and
// assemble_witness adds them to every candidate.  Empty when the
// forced-vertex reduction ran first.
VertexSet never_fire_outside(const TssInstance& core, const VertexSet& cover) {
  std::vector<int> ids;
  for (int v = 0; v < core.vertex_count(); ++v)
    if (core.threshold(v) > core.degree(v) && !cover.contains(v))
      ids.push_back(v);
  return VertexSet(std::move(ids));
}

struct CoreContext {
  const TssInstance& original;
  const TssInstance& core;
  const VertexSet& cover;  // core ids
  const std::vector<int>& core_to_original;
  const VertexSet& forced;     // original ids
  const VertexSet& must_seed;  // core ids outside the cover that never fire
  int k = 0;
  bool strict = false;
  bool minimize = true;  // false: stop at the first feasible assignment
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct Candidate {
  int total = 0;  // seeds on the core side (hitting set + stamp-0 cover)
  std::uint64_t index = 0;
  VertexSet witness;  // original ids, forced vertices included
};

struct RangeResult {
  long long built = 0, discarded = 0, infeasible = 0, pruned = 0, rejected = 0;
  long long cells = 0;
  std::optional<Candidate> best;
};

VertexSet assemble_witness(const CoreContext& ctx, const TimestampGuess& guess,
                           const std::vector<int>& hitting) {
  std::vector<int> ids(ctx.forced.members());
  for (std::size_t i = 0; i < guess.stamps.size(); ++i)
    if (guess.stamps[i] == 0)
      ids.push_back(ctx.core_to_original[ctx.cover.members()[i]]);
  for (int u : ctx.must_seed) ids.push_back(ctx.core_to_original[u]);
  for (int u : hitting) ids.push_back(ctx.core_to_original[u]);
  return VertexSet(std::move(ids));
}

// Evaluates guesses [lo, hi).  `bound` is the size of the best validated
// candidate from earlier chunks (minimize mode): assignments that cannot
// beat it are skipped before building anything.
void scan_range(const CoreContext& ctx, const GuessEnumerator& enumerator,
                std::uint64_t lo, std::uint64_t hi, int bound,
                DiffusionEngine& validator, RangeResult& out) {
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (ctx.deadline && (idx & 63u) == 0 &&
        std::chrono::steady_clock::now() > *ctx.deadline)
      throw TimeoutError();

    TimestampGuess guess = enumerator.at(idx);
    int seeded = static_cast<int>(ctx.must_seed.size());
    for (int s : guess.stamps)
      if (s == 0) ++seeded;

    const int local_bound =
        out.best ? std::min(bound, out.best->total) : bound;
    if (ctx.minimize && seeded >= local_bound) {
      ++out.pruned;
      continue;
    }

    auto built = build_mhs(ctx.core, ctx.cover, guess, ctx.k, ctx.strict);
    if (!built) {
      ++out.discarded;
      continue;
    }
    ++out.built;

    MhsStats mstats;
    std::optional<std::vector<int>> hitting;
    if (ctx.minimize) {
      if (auto opt = mhs_minimize(*built, &mstats)) hitting = std::move(opt->witness);
    } else {
      hitting = mhs_decide(*built, &mstats);
    }
    out.cells += mstats.cells_filled;
    if (!hitting) {
      ++out.infeasible;
      continue;
    }

    const int total = seeded + static_cast<int>(hitting->size());
    if (ctx.minimize && total >= local_bound) continue;

    VertexSet witness = assemble_witness(ctx, guess, *hitting);
    if (!validator.covers_all(witness.members())) {
      // Only reachable without the forced-vertex reduction; soundness net.
      ++out.rejected;
      continue;
    }
    out.best = Candidate{total, idx, std::move(witness)};
    if (!ctx.minimize) return;  // first feasible assignment wins
  }
}

struct DriveStats {
  long long built = 0, discarded = 0, infeasible = 0, pruned = 0, rejected = 0;
  long long cells = 0;
  std::uint64_t guesses = 0;
};

// Scans the whole guess space in fixed-size chunks.  The chunk grid and the
// prune bound (refreshed between chunks) do not depend on the thread count,
// so the returned candidate is identical for any `threads`.
std::optional<Candidate> drive(const CoreContext& ctx, int threads, bool early_exit,
                               DriveStats& stats) {
  constexpr std::uint64_t kChunk = 8192;

  GuessEnumerator enumerator(static_cast<int>(ctx.cover.size()));
  stats.guesses = enumerator.count();

  threads = std::max(1, threads);
  std::vector<DiffusionEngine> validators;
  validators.reserve(threads);
  for (int w = 0; w < threads; ++w) validators.emplace_back(ctx.original);

  std::optional<Candidate> best;
  auto better = [&](const Candidate& a, const Candidate& b) {
    return std::tie(a.total, a.index) < std::tie(b.total, b.index);
  };

  for (std::uint64_t chunk = 0; chunk < enumerator.count(); chunk += kChunk) {
    const std::uint64_t chunk_end = std::min(enumerator.count(), chunk + kChunk);
    const int bound = (ctx.minimize && best) ? best->total
                                             : std::numeric_limits<int>::max();

    std::vector<RangeResult> results(threads);
    if (threads == 1 || chunk_end - chunk < 2 * static_cast<std::uint64_t>(threads)) {
      scan_range(ctx, enumerator, chunk, chunk_end, bound, validators[0], results[0]);
    } else {
      const std::uint64_t span = chunk_end - chunk;
      const std::uint64_t per = (span + threads - 1) / threads;
      std::vector<std::exception_ptr> errors(threads);
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w) {
        const std::uint64_t lo = chunk + std::min<std::uint64_t>(span, w * per);
        const std::uint64_t hi = chunk + std::min<std::uint64_t>(span, (w + 1) * per);
        pool.emplace_back([&, w, lo, hi] {
          try {
            scan_range(ctx, enumerator, lo, hi, bound, validators[w], results[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    }

    for (auto& r : results) {
      stats.built += r.built;
      stats.discarded += r.discarded;
      stats.infeasible += r.infeasible;
      stats.pruned += r.pruned;
      stats.rejected += r.rejected;
      stats.cells += r.cells;
      if (!r.best) continue;
      if (!ctx.minimize) {
        // first feasible assignment = smallest index
        if (!best || r.best->index < best->index) best = std::move(r.best);
      } else if (!best || better(*r.best, *best)) {
        best = std::move(r.best);
      }
    }
    if (!ctx.minimize && best) return best;
    if (early_exit && best && best->total == 0) return best;
  }
  return best;
}

VertexSet map_cover_to_core(const TssInstance& original, const ReducedInstance& red,
                            const VertexSet& cover) {
  std::vector<int> core_of(original.vertex_count(), -1);
  for (std::size_t i = 0; i < red.core_to_original.size(); ++i)
    core_of[red.core_to_original[i]] = static_cast<int>(i);
  std::vector<int> ids;
  for (int v : cover)
    if (core_of[v] >= 0) ids.push_back(core_of[v]);
  return VertexSet(std::move(ids));
}

void check_cover_size(std::size_t t, int limit) {
  if (static_cast<int>(t) > limit)
    throw std::runtime_error(
        "vertex cover of size " + std::to_string(t) + " exceeds the limit " +
        std::to_string(limit) +
        "; the guess space grows as (2t+1)^t, raise the limit only deliberately");
}

}  // namespace

std::optional<VertexSet> solve_decision(const TssInstance& instance,
                                        const VertexSet& cover, int k,
                                        const SolveOptions& options) {
  if (k < 0) throw std::invalid_argument("budget must be non-negative");
  if (!is_vertex_cover(instance, cover))
    throw std::invalid_argument("supplied set is not a vertex cover");

  ReducedInstance red =
      options.reduce ? reduce_forced(instance) : passthrough(instance);
  if (static_cast<int>(red.forced.size()) > k) return std::nullopt;

  VertexSet cover_core = map_cover_to_core(instance, red, cover);

  {  // covers are target sets: cheap YES when the budget allows one
    std::vector<int> ids(red.forced.members());
    for (int v : cover_core) ids.push_back(red.core_to_original[v]);
    VertexSet wit(std::move(ids));
    if (static_cast<int>(wit.size()) <= k && is_target_set(instance, wit))
      return wit;
  }

  check_cover_size(cover_core.size(), options.max_cover_size);
  const VertexSet must_seed = never_fire_outside(red.core, cover_core);
  CoreContext ctx{instance,
                  red.core,
                  cover_core,
                  red.core_to_original,
                  red.forced,
                  must_seed,
                  k - static_cast<int>(red.forced.size()),
                  options.strict_discard,
                  /*minimize=*/false,
                  options.deadline};
  DriveStats stats;
  auto found = drive(ctx, options.threads, /*early_exit=*/false, stats);
  if (!found) return std::nullopt;
  return std::move(found->witness);
}

SolveResult solve_optimal(const TssInstance& instance, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  ReducedInstance red =
      options.reduce ? reduce_forced(instance) : passthrough(instance);
  const TssInstance& core = red.core;

  VertexSet cover_core;
  if (options.cover) {
    if (!is_vertex_cover(instance, *options.cover))
      throw std::invalid_argument("supplied set is not a vertex cover");
    cover_core = map_cover_to_core(instance, red, *options.cover);
  } else {
    cover_core = select_solver_cover(core);
  }
  check_cover_size(cover_core.size(), options.max_cover_size);
  const int t = static_cast<int>(cover_core.size());

  // Without the reduction, vertices that can never fire may survive outside
  // the cover; they belong to every target set, so widen the seed budget to
  // keep the optimum reachable.  After the reduction there are none and the
  // budget is exactly t (a cover is itself a target set).
  const VertexSet must_seed = never_fire_outside(core, cover_core);
  const int k = t + static_cast<int>(must_seed.size());

  CoreContext ctx{instance,
                  core,
                  cover_core,
                  red.core_to_original,
                  red.forced,
                  must_seed,
                  k,
                  options.strict_discard,
                  /*minimize=*/true,
                  options.deadline};
  DriveStats stats;
  auto best = drive(ctx, options.threads, options.early_exit, stats);

  if (!best) {
    // Defensive only: the all-zero assignment always survives and validates
    // (cover plus the never-firing vertices is a target set), so the scan
    // cannot come back empty.
    std::vector<int> ids(red.forced.members());
    for (int v : cover_core) ids.push_back(red.core_to_original[v]);
    for (int v : must_seed) ids.push_back(red.core_to_original[v]);
    VertexSet wit(std::move(ids));
    if (!is_target_set(instance, wit))
      throw std::logic_error("fallback witness failed validation");
    best = Candidate{static_cast<int>(wit.size() - red.forced.size()), 0,
                     std::move(wit)};
  }

  SolveResult result;
  result.witness = std::move(best->witness);
  result.optimum_size = static_cast<int>(result.witness.size());
  const auto elapsed = std::chrono::steady_clock::now() - start;
  result.stats = {
      {"built", stats.built},
      {"cells", stats.cells},
      {"cover", t},
      {"discarded", stats.discarded},
      {"forced", static_cast<long long>(red.forced.size())},
      {"guesses", static_cast<long long>(stats.guesses)},
      {"infeasible", stats.infeasible},
      {"ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()},
      {"pruned", stats.pruned},
      {"rejected", stats.rejected},
  };
  return result;
}

}  // namespace tss

#pragma once

// Exact target set solver parameterized by vertex cover size.
//
// Outline: fix a vertex cover C of size t.  In any activation process from
// a non-empty seed every vertex activates within 2t rounds, so each cover
// vertex can be assigned a hypothetical activation round ("stamp") from
// {0..2t}; stamp 0 means "seeded".  For a fixed assignment the activation
// round of every vertex outside C is determined (their neighborhoods lie
// inside C), and the seeds needed outside C reduce to a hitting set
// problem with multiplicity demands: cover vertex v_i stamped r >= 1 still
// misses l_i neighbors active before round r, and only its non-cover
// neighbors stamped >= r can supply them from round 0.  Scanning all
// (2t+1)^t assignments and solving each hitting set instance yields the
// optimum.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "tss/instance.hpp"
#include "tss/mhs.hpp"

namespace tss {

struct SolveOptions {
  // Discard a stamp assignment only when some demand exceeds its supply
  // set (or the seed budget is blown).  The classic alternative, dropping
  // every assignment with a demand >= t, is exposed for comparison runs;
  // it can skip assignments that relaxed mode solves.
  bool strict_discard = false;

  // Peel forced vertices (threshold above degree) before solving.  Turning
  // this off keeps the result exact — never-firing vertices are committed
  // as seeds per assignment instead — it just skips the cheap shrink, which
  // is occasionally useful when comparing engines.
  bool reduce = true;

  int threads = 1;

  // Stop as soon as a zero-cost assignment is found instead of scanning
  // the whole guess space.
  bool early_exit = false;

  // Guess spaces grow as (2t+1)^t; refuse covers above this size.
  int max_cover_size = 6;

  // Vertex cover of the *input* instance to parameterize on; validated.
  // Default: a cover of the reduced core chosen by the solver.
  std::optional<VertexSet> cover;

  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct TimeoutError : std::runtime_error {
  TimeoutError() : std::runtime_error("solve deadline exceeded") {}
};

// Stamp assignment for the cover, aligned with cover.members().
struct TimestampGuess {
  std::vector<int> stamps;
};

// Lexicographic enumeration of {0..2t}^t with O(1) random access, so the
// guess space can be split into deterministic chunks.
class GuessEnumerator {
 public:
  explicit GuessEnumerator(int t);
  int cover_size() const { return t_; }
  std::uint64_t count() const { return count_; }
  TimestampGuess at(std::uint64_t index) const;

 private:
  int t_;
  std::uint64_t count_;
};

// Outcome of peeling forced vertices.  A vertex whose threshold exceeds its
// degree can never be activated by neighbors, so it belongs to every target
// set; seeding it (and everything that follows for free) leaves a core on
// the surviving vertices whose thresholds are discounted by their removed
// active neighbors.  Survivor thresholds stay in [1, degree].  S is an
// optimal target set of the core iff S + forced is optimal for the input.
struct ReducedInstance {
  TssInstance core;
  VertexSet forced;                        // input-instance ids
  std::vector<int> core_to_original;       // core id -> input id
  std::map<int, int> pre_activated_discount;  // input id -> threshold already met
};

ReducedInstance reduce_forced(const TssInstance& instance);

// Stamp assigned to vertices outside the cover that can never activate
// under a guess (possible only when threshold exceeds degree).
inline constexpr int kUnreachableStamp = INT32_MAX;

// Hitting set instance for one stamp assignment over `cover`, or nullopt
// when the assignment is discarded.  `k` is the seed budget; the instance
// budget becomes k minus the number of committed seeds: stamp-0 cover
// vertices plus every non-cover vertex whose threshold exceeds its degree
// (those can only activate by being seeded, so they are treated as seeds
// and left out of the universe).  Universe: the remaining non-cover
// vertices ascending.  Stamp-0 cover vertices contribute no demand (they
// are seeds themselves).
std::optional<MhsInstance> build_mhs(const TssInstance& core, const VertexSet& cover,
                                     const TimestampGuess& guess, int k,
                                     bool strict_discard = false);

// Is there a target set of size <= k?  Returns the witness (validated by
// re-running the activation process) or nullopt.  `cover` must be a vertex
// cover of `instance`.
std::optional<VertexSet> solve_decision(const TssInstance& instance,
                                        const VertexSet& cover, int k,
                                        const SolveOptions& options = {});

// Minimum target set.  stats counters: built, cells, cover, discarded,
// forced, guesses, infeasible, ms, pruned, rejected.
SolveResult solve_optimal(const TssInstance& instance,
                          const SolveOptions& options = {});

}  // namespace tss

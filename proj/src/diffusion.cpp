#include "tss/diffusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace tss {

namespace {

void check_seed(const TssInstance& instance, const VertexSet& seed) {
  if (!seed.empty() &&
      (seed.members().front() < 0 || seed.members().back() >= instance.vertex_count()))
    throw std::out_of_range("seed vertex out of range");
}

}  // namespace

ActivationTrace diffuse(const TssInstance& instance, const VertexSet& seed) {
  check_seed(instance, seed);
  const int n = instance.vertex_count();

  ActivationTrace trace;
  trace.timestamp.assign(n, ActivationTrace::kNever);
  trace.rounds.push_back(seed);

  std::vector<int> met(n, 0);
  std::vector<char> pending(n, 0);  // activated or queued for this round
  std::vector<int> current = seed.members();
  for (int v : current) {
    trace.timestamp[v] = 0;
    pending[v] = 1;
  }

  std::vector<int> next;
  // Threshold-0 vertices fire in round 1 without any neighbor help.
  for (int v = 0; v < n; ++v)
    if (!pending[v] && instance.threshold(v) == 0) {
      pending[v] = 1;
      next.push_back(v);
    }

  int round = 1;
  while (true) {
    for (int u : current)
      for (int w : instance.neighbors(u)) {
        ++met[w];
        if (!pending[w] && met[w] >= instance.threshold(w)) {
          pending[w] = 1;
          next.push_back(w);
        }
      }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    for (int v : next) trace.timestamp[v] = round;
    trace.rounds.push_back(VertexSet(next));
    current = std::move(next);
    next.clear();
    ++round;
  }
  return trace;
}

VertexSet influence(const TssInstance& instance, const VertexSet& seed) {
  ActivationTrace trace = diffuse(instance, seed);
  std::vector<int> active;
  for (int v = 0; v < instance.vertex_count(); ++v)
    if (trace.timestamp[v] != ActivationTrace::kNever) active.push_back(v);
  return VertexSet(std::move(active));
}

bool is_target_set(const TssInstance& instance, const VertexSet& seed) {
  check_seed(instance, seed);
  DiffusionEngine engine(instance);
  return engine.covers_all(seed.members());
}

DiffusionEngine::DiffusionEngine(const TssInstance& instance)
    : instance_(instance),
      met_(instance.vertex_count(), 0),
      active_(instance.vertex_count(), 0) {}

int DiffusionEngine::activated_count(std::span<const int> seed) {
  const int n = instance_.vertex_count();
  frontier_.clear();
  touched_.clear();

  int activated = 0;
  for (int v : seed)
    if (!active_[v]) {
      active_[v] = 1;
      frontier_.push_back(v);
      touched_.push_back(v);
      ++activated;
    }
  for (int v = 0; v < n; ++v)
    if (!active_[v] && instance_.threshold(v) == 0) {
      active_[v] = 1;
      frontier_.push_back(v);
      touched_.push_back(v);
      ++activated;
    }

  while (!frontier_.empty()) {
    next_.clear();
    for (int u : frontier_)
      for (int w : instance_.neighbors(u)) {
        if (met_[w] == 0) touched_.push_back(w);
        ++met_[w];
        if (!active_[w] && met_[w] >= instance_.threshold(w)) {
          active_[w] = 1;
          next_.push_back(w);
          ++activated;
        }
      }
    std::swap(frontier_, next_);
  }

  for (int v : touched_) {
    met_[v] = 0;
    active_[v] = 0;
  }
  return activated;
}

bool DiffusionEngine::covers_all(std::span<const int> seed) {
  return activated_count(seed) == instance_.vertex_count();
}

}  // namespace tss

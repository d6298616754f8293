#include "tss/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace tss {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(std::vector<int>(members)) {}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(int v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

TssInstance::TssInstance(int vertex_count, std::vector<std::pair<int, int>> edges,
                         std::vector<int> thresholds,
                         std::optional<Bipartition> bipartition)
    : n_(vertex_count),
      edges_(std::move(edges)),
      thresholds_(std::move(thresholds)),
      bipartition_(std::move(bipartition)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (static_cast<int>(thresholds_.size()) != n_)
    throw std::invalid_argument("expected one threshold per vertex");
  for (int v = 0; v < n_; ++v)
    if (thresholds_[v] < 0) throw std::invalid_argument("negative threshold");

  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");

  adj_offsets_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++adj_offsets_[u + 1];
    ++adj_offsets_[v + 1];
  }
  for (int v = 0; v < n_; ++v) adj_offsets_[v + 1] += adj_offsets_[v];
  adj_.resize(edges_.size() * 2);
  std::vector<int> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  for (int v = 0; v < n_; ++v)
    std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);

  if (bipartition_) {
    const auto& s1 = bipartition_->side1;
    const auto& s2 = bipartition_->side2;
    if (!set_intersection(s1, s2).empty())
      throw std::invalid_argument("bipartition sides overlap");
    if (static_cast<int>(s1.size() + s2.size()) != n_ ||
        (!s1.empty() && (s1.members().front() < 0 || s1.members().back() >= n_)) ||
        (!s2.empty() && (s2.members().front() < 0 || s2.members().back() >= n_)))
      throw std::invalid_argument("bipartition does not partition the vertices");
  }
}

std::span<const int> TssInstance::neighbors(int v) const {
  return {adj_.data() + adj_offsets_[v],
          static_cast<std::size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

int TssInstance::degree(int v) const {
  return adj_offsets_[v + 1] - adj_offsets_[v];
}

SetCoverInstance::SetCoverInstance(int ground_size,
                                   std::vector<std::vector<int>> subsets)
    : ground_size_(ground_size), subsets_(std::move(subsets)) {
  if (ground_size_ < 0) throw std::invalid_argument("ground size must be non-negative");
  for (auto& s : subsets_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && (s.front() < 0 || s.back() >= ground_size_))
      throw std::invalid_argument("subset element out of range");
  }
}

std::vector<int> SetCoverInstance::uncovered_elements() const {
  std::vector<char> seen(ground_size_, 0);
  for (const auto& s : subsets_)
    for (int e : s) seen[e] = 1;
  std::vector<int> out;
  for (int e = 0; e < ground_size_; ++e)
    if (!seen[e]) out.push_back(e);
  return out;
}

}  // namespace tss

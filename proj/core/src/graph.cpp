#include "mwis/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mwis {

Weight checked_add(Weight a, Weight b) {
  Weight out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw WeightOverflowError("weight addition overflows int64: " + std::to_string(a) +
                              " + " + std::to_string(b));
  }
  return out;
}

Weight checked_sub(Weight a, Weight b) {
  Weight out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw WeightOverflowError("weight subtraction overflows int64: " + std::to_string(a) +
                              " - " + std::to_string(b));
  }
  return out;
}

WeightedGraph::WeightedGraph(std::vector<NodeId> ids, std::vector<Weight> weights,
                             std::span<const Edge> edges)
    : ids_(std::move(ids)), weights_(std::move(weights)) {
  const std::size_t n = ids_.size();
  if (weights_.size() != n) {
    throw GraphInvariantError("weight vector has " + std::to_string(weights_.size()) +
                              " entries for " + std::to_string(n) + " nodes");
  }
  index_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (weights_[v] < 0) {
      throw GraphInvariantError("node " + std::to_string(ids_[v]) + " has negative weight " +
                                std::to_string(weights_[v]));
    }
    if (!index_.emplace(ids_[v], static_cast<NodeIndex>(v)).second) {
      throw GraphInvariantError("duplicate node id " + std::to_string(ids_[v]));
    }
  }

  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw GraphInvariantError("edge endpoint out of range");
    if (u == v) throw GraphInvariantError("self-loop at node " + std::to_string(ids_[u]));
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    targets_[cursor[u]++] = v;
    targets_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw GraphInvariantError("duplicate edge at node " + std::to_string(ids_[v]));
    }
    max_degree_ = std::max(max_degree_, degree[v]);
  }
}

WeightedGraph WeightedGraph::with_default_ids(std::vector<Weight> weights,
                                              std::span<const Edge> edges) {
  std::vector<NodeId> ids(weights.size());
  std::iota(ids.begin(), ids.end(), NodeId{0});
  return WeightedGraph(std::move(ids), std::move(weights), edges);
}

bool WeightedGraph::adjacent(NodeIndex u, NodeIndex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<NodeIndex> WeightedGraph::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Weight WeightedGraph::total_weight() const {
  Weight total = 0;
  for (Weight w : weights_) total = checked_add(total, w);
  return total;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeIndex u = 0; u < size(); ++u) {
    for (NodeIndex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

WeightedGraph WeightedGraph::with_weights(std::vector<Weight> weights) const {
  auto e = edges();
  return WeightedGraph(ids_, std::move(weights), e);
}

WeightedGraph WeightedGraph::induced(std::span<const NodeIndex> nodes) const {
  std::vector<NodeIndex> keep(nodes.begin(), nodes.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::int64_t> position(size(), -1);
  std::vector<NodeId> ids;
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    position[keep[i]] = static_cast<std::int64_t>(i);
    ids.push_back(ids_[keep[i]]);
    weights.push_back(weights_[keep[i]]);
  }
  std::vector<Edge> sub_edges;
  for (NodeIndex u : keep) {
    for (NodeIndex v : neighbors(u)) {
      if (u < v && position[v] >= 0) {
        sub_edges.emplace_back(static_cast<NodeIndex>(position[u]),
                               static_cast<NodeIndex>(position[v]));
      }
    }
  }
  return WeightedGraph(std::move(ids), std::move(weights), sub_edges);
}

bool IndependentSet::contains(NodeIndex v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

Weight sum_over(std::span<const Weight> values, std::span<const NodeIndex> members) {
  Weight total = 0;
  for (NodeIndex v : members) total = checked_add(total, values[v]);
  return total;
}

IndependentSet make_set(const WeightedGraph& g, std::vector<NodeIndex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Weight w = sum_over(g.weights(), members);
  return {std::move(members), w};
}

bool is_independent(const WeightedGraph& g, std::span<const NodeIndex> members) {
  std::vector<char> in(g.size(), 0);
  for (NodeIndex v : members) in[v] = 1;
  for (NodeIndex v : members) {
    for (NodeIndex u : g.neighbors(v)) {
      if (in[u]) return false;
    }
  }
  return true;
}

}  // namespace mwis

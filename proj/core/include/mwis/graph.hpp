#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mwis {

/// Network-visible node identifier.
using NodeId = std::uint64_t;
/// Dense position of a node inside a WeightedGraph (0..n-1).
using NodeIndex = std::uint32_t;
/// Node weights and residual weights. Input weights are non-negative.
using Weight = std::int64_t;

using Edge = std::pair<NodeIndex, NodeIndex>;

/// Raised when a graph or weight vector breaks a structural invariant
/// (self-loop, duplicate edge or id, negative input weight).
class GraphInvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when exact weight arithmetic would leave the int64 range.
class WeightOverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Undirected simple graph with non-negative integer node weights.
///
/// Adjacency is stored in CSR form with each neighbor list sorted by index.
/// Values are immutable after construction and safe to share read-only.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Builds a graph from identifiers, weights and an edge list over indices.
  /// Throws GraphInvariantError on self-loops, duplicate edges, duplicate
  /// identifiers, out-of-range endpoints or negative weights.
  WeightedGraph(std::vector<NodeId> ids, std::vector<Weight> weights,
                std::span<const Edge> edges);

  /// Convenience constructor: identifiers 0..n-1.
  static WeightedGraph with_default_ids(std::vector<Weight> weights,
                                        std::span<const Edge> edges);

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return targets_.size() / 2; }
  bool empty() const { return ids_.empty(); }

  NodeId id(NodeIndex v) const { return ids_[v]; }
  Weight weight(NodeIndex v) const { return weights_[v]; }
  std::span<const NodeId> ids() const { return ids_; }
  std::span<const Weight> weights() const { return weights_; }

  std::span<const NodeIndex> neighbors(NodeIndex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeIndex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const { return max_degree_; }

  /// Position of neighbor list entries in the flat adjacency array.
  std::size_t adjacency_offset(NodeIndex v) const { return offsets_[v]; }

  bool adjacent(NodeIndex u, NodeIndex v) const;
  std::optional<NodeIndex> index_of(NodeId id) const;

  /// Sum of all input weights; throws WeightOverflowError on overflow.
  Weight total_weight() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Same topology and identifiers, different (validated) weights.
  WeightedGraph with_weights(std::vector<Weight> weights) const;

  /// Subgraph induced by `nodes` (indices into this graph), keeping the
  /// original identifiers and weights. `nodes` need not be sorted.
  WeightedGraph induced(std::span<const NodeIndex> nodes) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.ids_ == b.ids_ && a.weights_ == b.weights_ &&
           a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<NodeId> ids_;
  std::vector<Weight> weights_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeIndex> targets_;
  std::unordered_map<NodeId, NodeIndex> index_;
  std::size_t max_degree_ = 0;
};

/// A set of nodes together with its total input weight.
struct IndependentSet {
  std::vector<NodeIndex> members;  // sorted, unique
  Weight weight = 0;

  std::size_t size() const { return members.size(); }
  bool contains(NodeIndex v) const;

  friend bool operator==(const IndependentSet&, const IndependentSet&) = default;
};

/// Builds an IndependentSet over `g` from arbitrary member indices
/// (sorted and de-duplicated here). Weight is the exact sum of g's weights.
IndependentSet make_set(const WeightedGraph& g, std::vector<NodeIndex> members);

/// True iff no two members are adjacent in g.
bool is_independent(const WeightedGraph& g, std::span<const NodeIndex> members);

/// Sum of `values[v]` over members, with overflow detection.
Weight sum_over(std::span<const Weight> values, std::span<const NodeIndex> members);

/// Residual weight function of one local-ratio phase.
struct ResidualWeights {
  int phase = 1;
  std::vector<Weight> values;

  static ResidualWeights from_graph(const WeightedGraph& g) {
    return {1, std::vector<Weight>(g.weights().begin(), g.weights().end())};
  }
};

/// Overflow-checked helpers used wherever weights are summed or reduced.
Weight checked_add(Weight a, Weight b);
Weight checked_sub(Weight a, Weight b);

}  // namespace mwis

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/simulator.hpp"

namespace mwis {

/// One invocation target for an independent-set algorithm: a host graph,
/// the node subset the algorithm runs on, and the weight function it sees
/// (input weights, or a residual function during local-ratio phases).
struct Instance {
  const WeightedGraph* graph = nullptr;
  std::vector<NodeIndex> nodes;  // sorted
  std::vector<Weight> weights;   // indexed by host NodeIndex, size == graph->size()
  sim::SimOptions sim;

  static Instance whole(const WeightedGraph& g, sim::SimOptions opts = {});
  /// Nodes of g whose entry in `weights` is strictly positive.
  static Instance positive(const WeightedGraph& g, std::vector<Weight> weights,
                           sim::SimOptions opts = {});

  Weight active_weight() const { return sum_over(weights, nodes); }
  /// Maximum degree of the subgraph induced by `nodes`.
  std::size_t max_degree() const;

  /// Copy of the simulator options with a fresh seed.
  sim::SimOptions options(std::uint64_t seed) const {
    auto o = sim;
    o.seed = seed;
    return o;
  }
};

/// Diagnostics that only some algorithms produce.
struct Diagnostics {
  std::optional<std::size_t> sampled_max_degree;  // Delta_H
  std::optional<Weight> sampled_weight;           // w(V_H)
  std::optional<std::size_t> sampled_nodes;       // |V_H|
};

struct AlgorithmRun {
  std::vector<NodeIndex> members;  // sorted host indices
  sim::RoundStats stats;
  /// False when an MIS black-box call did not return a maximal independent set.
  bool mis_valid = true;
  Diagnostics diagnostics;
};

/// Type-erased handle for any distributed independent-set algorithm that
/// can run on an Instance. Must only select nodes of the instance.
using Algorithm = std::function<AlgorithmRun(const Instance&, std::uint64_t seed)>;

/// Maximum degree of the subgraph of g induced by `nodes`.
std::size_t induced_max_degree(const WeightedGraph& g, std::span<const NodeIndex> nodes);

}  // namespace mwis

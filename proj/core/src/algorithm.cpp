#include "mwis/algorithm.hpp"

#include <algorithm>

namespace mwis {

Instance Instance::whole(const WeightedGraph& g, sim::SimOptions opts) {
  Instance inst;
  inst.graph = &g;
  inst.nodes.resize(g.size());
  for (NodeIndex v = 0; v < g.size(); ++v) inst.nodes[v] = v;
  inst.weights.assign(g.weights().begin(), g.weights().end());
  inst.sim = opts;
  return inst;
}

Instance Instance::positive(const WeightedGraph& g, std::vector<Weight> weights,
                            sim::SimOptions opts) {
  Instance inst;
  inst.graph = &g;
  for (NodeIndex v = 0; v < g.size(); ++v)
    if (weights[v] > 0) inst.nodes.push_back(v);
  inst.weights = std::move(weights);
  inst.sim = opts;
  return inst;
}

std::size_t Instance::max_degree() const { return induced_max_degree(*graph, nodes); }

std::size_t induced_max_degree(const WeightedGraph& g, std::span<const NodeIndex> nodes) {
  std::vector<char> in(g.size(), 0);
  for (NodeIndex v : nodes) in[v] = 1;
  std::size_t best = 0;
  for (NodeIndex v : nodes) {
    std::size_t d = 0;
    for (NodeIndex u : g.neighbors(v)) d += in[u] ? 1 : 0;
    best = std::max(best, d);
  }
  return best;
}

}  // namespace mwis

#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis::test {

inline WeightedGraph make_graph(std::vector<Weight> w, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return WeightedGraph::with_default_ids(std::move(w), e);
}

inline WeightedGraph path(std::vector<Weight> w) {
  std::vector<Edge> e;
  for (NodeIndex v = 0; v + 1 < w.size(); ++v) e.emplace_back(v, v + 1);
  return WeightedGraph::with_default_ids(std::move(w), e);
}

inline WeightedGraph cycle(std::vector<Weight> w) {
  std::vector<Edge> e;
  const auto n = static_cast<NodeIndex>(w.size());
  for (NodeIndex v = 0; v < n; ++v) e.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return WeightedGraph::with_default_ids(std::move(w), e);
}

// Center 0, leaves 1..k.
inline WeightedGraph star(Weight center, std::vector<Weight> leaves) {
  std::vector<Weight> w{center};
  std::vector<Edge> e;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    w.push_back(leaves[i]);
    e.emplace_back(0, static_cast<NodeIndex>(i + 1));
  }
  return WeightedGraph::with_default_ids(std::move(w), e);
}

inline WeightedGraph clique(std::vector<Weight> w) {
  std::vector<Edge> e;
  for (NodeIndex u = 0; u < w.size(); ++u)
    for (NodeIndex v = u + 1; v < w.size(); ++v) e.emplace_back(u, v);
  return WeightedGraph::with_default_ids(std::move(w), e);
}

// Independent check: enumerate all 2^n subsets with adjacency bitmasks.
inline Weight exhaustive_opt(const WeightedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  Weight best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    Weight w = 0;
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (!(s >> v & 1)) continue;
      if (adj[v] & s) ok = false;
      w += g.weight(static_cast<NodeIndex>(v));
    }
    if (ok) best = std::max(best, w);
  }
  return best;
}

inline std::vector<NodeIndex> all_nodes(const WeightedGraph& g) {
  std::vector<NodeIndex> v(g.size());
  for (NodeIndex i = 0; i < g.size(); ++i) v[i] = i;
  return v;
}

}  // namespace mwis::test

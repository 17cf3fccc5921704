#include "mwis/harness/corpus.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "mwis/oracle.hpp"

namespace mwis::harness {
namespace {

std::string encode(const WeightedGraph& t, NodeIndex v, NodeIndex parent) {
  std::vector<std::string> kids;
  for (NodeIndex u : t.neighbors(v))
    if (u != parent) kids.push_back(encode(t, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

WeightedGraph from_pruefer(std::size_t n, const std::vector<NodeIndex>& seq) {
  std::vector<std::size_t> degree(n, 1);
  for (NodeIndex v : seq) ++degree[v];
  std::vector<Edge> edges;
  for (NodeIndex v : seq) {
    NodeIndex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    --degree[leaf];
    --degree[v];
  }
  std::vector<NodeIndex> rest;
  for (NodeIndex v = 0; v < n; ++v)
    if (degree[v] == 1) rest.push_back(v);
  edges.emplace_back(rest[0], rest[1]);
  return WeightedGraph::with_default_ids(std::vector<Weight>(n, 1), edges);
}

}  // namespace

std::string tree_canonical_form(const WeightedGraph& tree) {
  const std::size_t n = tree.size();
  if (n == 0) return "";
  std::vector<std::size_t> deg(n);
  std::vector<NodeIndex> layer;
  for (NodeIndex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<NodeIndex> next;
    for (NodeIndex v : layer)
      for (NodeIndex u : tree.neighbors(v))
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::string best;
  for (NodeIndex c : layer) {
    std::string s = encode(tree, c, c);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<WeightedGraph> all_trees(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {WeightedGraph::with_default_ids({1}, {})};
  if (n == 2) {
    const Edge e{0, 1};
    return {WeightedGraph::with_default_ids({1, 1}, std::span<const Edge>(&e, 1))};
  }
  std::set<std::string> seen;
  std::vector<WeightedGraph> trees;
  std::vector<NodeIndex> seq(n - 2, 0);
  while (true) {
    WeightedGraph t = from_pruefer(n, seq);
    if (seen.insert(tree_canonical_form(t)).second) trees.push_back(std::move(t));
    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == n) seq[pos++] = 0;
    if (pos == seq.size()) break;
  }
  return trees;
}

GraphSpec resample(GraphSpec spec, const std::function<bool(const WeightedGraph&)>& accept,
                   std::size_t tries) {
  for (std::size_t k = 0; k < tries; ++k, ++spec.seed)
    if (accept(generate(spec))) return spec;
  throw std::runtime_error("no acceptable graph after " + std::to_string(tries) + " draws");
}

GraphSpec connected(GraphSpec spec) {
  return resample(spec, [](const WeightedGraph& g) { return is_connected(g); });
}

}  // namespace mwis::harness

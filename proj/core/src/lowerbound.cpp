#include "mwis/lowerbound.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "mwis/mis.hpp"

namespace mwis {

CliqueCycle build_clique_cycle(std::size_t n0, std::size_t n1) {
  if (n0 < 3) throw std::invalid_argument("cycle of cliques needs n0 >= 3");
  std::vector<NodeId> ids(n0);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  return build_clique_cycle(ids, n1);
}

CliqueCycle build_clique_cycle(std::span<const NodeId> cycle_ids, std::size_t n1) {
  const std::size_t n0 = cycle_ids.size();
  if (n0 < 3) throw std::invalid_argument("cycle of cliques needs n0 >= 3");
  if (n1 < 1) throw std::invalid_argument("cycle of cliques needs n1 >= 1");
  if (n0 * n1 > std::numeric_limits<NodeIndex>::max()) throw std::invalid_argument("too many nodes");

  const unsigned shift = std::bit_width(n1 - 1);
  CliqueCycle cc;
  cc.n0 = n0;
  cc.n1 = n1;
  std::vector<NodeId> ids;
  ids.reserve(n0 * n1);
  for (std::size_t i = 1; i <= n0; ++i) {
    const NodeId base = cycle_ids[i - 1];
    if (shift > 0 && (base >> (64 - shift)) != 0)
      throw std::invalid_argument("composite identifier does not fit in 64 bits");
    for (std::size_t j = 1; j <= n1; ++j) ids.push_back((base << shift) | (j - 1));
  }

  std::vector<Edge> edges;
  edges.reserve(n0 * (n1 * (n1 - 1) / 2 + n1 * n1));
  for (std::size_t i = 1; i <= n0; ++i) {
    const std::size_t next = i % n0 + 1;
    for (std::size_t j = 1; j <= n1; ++j) {
      for (std::size_t k = j + 1; k <= n1; ++k) edges.emplace_back(cc.index(i, j), cc.index(i, k));
      for (std::size_t k = 1; k <= n1; ++k) edges.emplace_back(cc.index(i, j), cc.index(next, k));
    }
  }
  cc.graph = WeightedGraph(std::move(ids), std::vector<Weight>(n0 * n1, 1), edges);
  return cc;
}

std::vector<std::size_t> map_back(const CliqueCycle& cc, std::span<const NodeIndex> members) {
  if (!is_independent(cc.graph, members))
    throw std::invalid_argument("set is not independent in the cycle of cliques");
  std::vector<std::size_t> hits;
  for (NodeIndex v : members) {
    if (v >= cc.graph.size()) throw std::invalid_argument("node outside the cycle of cliques");
    hits.push_back(cc.clique_of(v) - 1);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

std::vector<NodeIndex> cycle_order(const WeightedGraph& g) {
  const std::size_t n = g.size();
  if (n < 3 || g.edge_count() != n) throw std::invalid_argument("graph is not a cycle");
  for (NodeIndex v = 0; v < n; ++v)
    if (g.degree(v) != 2) throw std::invalid_argument("graph is not a cycle");

  NodeIndex start = 0;
  for (NodeIndex v = 1; v < n; ++v)
    if (g.id(v) < g.id(start)) start = v;
  const auto first = g.neighbors(start);
  NodeIndex next = g.id(first[0]) < g.id(first[1]) ? first[0] : first[1];

  std::vector<NodeIndex> order{start};
  NodeIndex prev = start;
  while (next != start) {
    if (order.size() == n) throw std::invalid_argument("graph is not a cycle");
    order.push_back(next);
    const auto nb = g.neighbors(next);
    const NodeIndex after = nb[0] == prev ? nb[1] : nb[0];
    prev = next;
    next = after;
  }
  if (order.size() != n) throw std::invalid_argument("graph is not a single cycle");
  return order;
}

std::size_t max_gap(std::size_t n, std::span<const std::size_t> hits) {
  if (hits.empty()) return n;
  std::size_t best = 0;
  for (std::size_t k = 0; k + 1 < hits.size(); ++k)
    best = std::max(best, hits[k + 1] - hits[k] - 1);
  return std::max(best, n - hits.back() - 1 + hits.front());
}

RandMisResult rand_mis(const WeightedGraph& cycle, const Algorithm& alg, std::size_t n1,
                       std::uint64_t seed, const RandMisParams& params) {
  const std::vector<NodeIndex> order = cycle_order(cycle);
  std::vector<NodeId> ids(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) ids[i] = cycle.id(order[i]);
  const CliqueCycle cc = build_clique_cycle(ids, n1);

  AlgorithmRun run = alg(Instance::whole(cc.graph, params.sim), seed);
  std::vector<std::size_t> hits;
  try {
    hits = map_back(cc, run.members);
  } catch (const std::invalid_argument& e) {
    throw InvalidInnerOutput(std::string("inner algorithm output rejected: ") + e.what());
  }

  RandMisResult result;
  result.inner_stats = std::move(run.stats);
  result.inner_mis_valid = run.mis_valid;
  result.max_gap = max_gap(order.size(), hits);
  const double T = static_cast<double>(result.inner_stats.rounds);
  result.r_large = (100.0 * params.approx_c + 1.0) * T + 2.0;
  result.r_small = 100.0 * params.approx_c * T;

  std::vector<char> covered(cycle.size(), 0);
  for (std::size_t pos : hits) {
    const NodeIndex u = order[pos];
    result.mapped.push_back(u);
    covered[u] = 1;
    for (NodeIndex v : cycle.neighbors(u)) covered[v] = 1;
  }
  std::vector<NodeIndex> rest;
  for (NodeIndex v = 0; v < cycle.size(); ++v)
    if (!covered[v]) rest.push_back(v);
  const IndependentSet fill = greedy_mis(cycle, rest, GreedyOrder::by_id);

  std::vector<NodeIndex> all = result.mapped;
  all.insert(all.end(), fill.members.begin(), fill.members.end());
  result.mis = make_set(cycle, std::move(all));
  std::sort(result.mapped.begin(), result.mapped.end());

  std::vector<NodeIndex> everyone(cycle.size());
  std::iota(everyone.begin(), everyone.end(), NodeIndex{0});
  if (const MisCheck check = verify_mis(cycle, everyone, result.mis.members); !check)
    throw ReductionError("final set is not a maximal independent set: " + check.violation);
  return result;
}

}  // namespace mwis

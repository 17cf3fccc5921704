#include "mwis/arb.hpp"

#include <algorithm>
#include <bit>

#include "mwis/approx.hpp"

namespace mwis {
namespace {

constexpr std::uint64_t kReduceKey = 0x61726272;
constexpr std::uint64_t kPopKey = 0x61727070;

}  // namespace

std::vector<NodeIndex> low_degree_subgraph(const WeightedGraph& g,
                                           std::span<const NodeIndex> nodes, std::size_t alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  std::vector<char> in(g.size(), 0);
  for (NodeIndex v : nodes) in[v] = 1;
  std::vector<NodeIndex> low;
  for (NodeIndex v : nodes) {
    std::size_t d = 0;
    for (NodeIndex u : g.neighbors(v)) d += in[u];
    if (d <= 4 * alpha) low.push_back(v);
  }
  std::sort(low.begin(), low.end());
  return low;
}

ArbStep arb_reduce(const WeightedGraph& g, std::span<const Weight> w,
                   std::span<const NodeIndex> I, std::span<const NodeIndex> low,
                   std::span<const NodeIndex> nodes) {
  if (!is_independent(g, I)) throw std::invalid_argument("reduction set is not independent");
  ArbStep step;
  step.weights.assign(w.begin(), w.end());
  for (NodeIndex u : I)
    for (NodeIndex v : g.neighbors(u)) step.weights[v] = checked_sub(step.weights[v], w[u]);
  for (NodeIndex v : low) step.weights[v] = 0;
  for (NodeIndex u : I) step.weights[u] = 0;
  for (NodeIndex v : nodes)
    if (step.weights[v] > 0) step.nodes.push_back(v);
  std::sort(step.nodes.begin(), step.nodes.end());
  return step;
}

std::size_t arb_phase_count(std::size_t n) {
  if (n <= 1) return 1;
  return static_cast<std::size_t>(std::bit_width(n - 1)) + 1;
}

ArbResult arb_approx(const WeightedGraph& g, const ArbParams& params, const Algorithm& inner,
                     std::uint64_t seed, sim::SimOptions opts) {
  if (params.alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (!(params.eps > 0)) throw std::invalid_argument("eps must be positive");
  const Instance base = Instance::whole(g, opts);
  ArbResult result;
  result.phases = arb_phase_count(std::max<std::size_t>(g.size(), 1));

  std::vector<Weight> w = base.weights;
  std::vector<NodeIndex> nodes;
  for (NodeIndex v : base.nodes)
    if (w[v] > 0) nodes.push_back(v);
  std::vector<char> member(g.size(), 0);
  std::vector<char> low_mark(g.size(), 0);

  for (std::size_t i = 1; i <= result.phases; ++i) {
    result.active_sizes.push_back(nodes.size());
    Instance sub;
    sub.graph = &g;
    sub.nodes = low_degree_subgraph(g, nodes, params.alpha);
    sub.weights = w;
    sub.sim = base.sim;

    AlgorithmRun run;
    if (!sub.nodes.empty()) run = inner(sub, derive_seed(seed, i));
    result.mis_valid = result.mis_valid && run.mis_valid;
    result.inner_rounds.push_back(run.stats.rounds);
    result.max_inner_rounds = std::max(result.max_inner_rounds, run.stats.rounds);
    result.stats.append(run.stats);

    StackFrame frame;
    frame.phase = i;
    frame.members = run.members;
    std::sort(frame.members.begin(), frame.members.end());
    if (std::adjacent_find(frame.members.begin(), frame.members.end()) != frame.members.end())
      throw InnerFailure(i, "duplicate members");
    for (NodeIndex v : frame.members) {
      if (!std::binary_search(sub.nodes.begin(), sub.nodes.end(), v))
        throw InnerFailure(i, "selected node " + std::to_string(g.id(v)) +
                                  " outside the low-degree subgraph");
      frame.residual.push_back(w[v]);
    }
    if (!is_independent(g, frame.members)) throw InnerFailure(i, "output is not independent");

    if (!nodes.empty()) {
      for (NodeIndex v : frame.members) member[v] = 1;
      for (NodeIndex v : sub.nodes) low_mark[v] = 1;
      const ReductionProgram program(member, &low_mark);
      auto red = sim::run_on_subgraph(g, nodes, program,
                                      base.options(derive_seed(seed, kReduceKey + i)), w);
      for (NodeIndex v : nodes) w[v] = *red.outputs[v];
      for (NodeIndex v : frame.members) member[v] = 0;
      for (NodeIndex v : sub.nodes) low_mark[v] = 0;
      result.stats.append(red.stats);
    }
    std::erase_if(nodes, [&](NodeIndex v) { return w[v] <= 0; });
    result.stack.push_back(std::move(frame));
  }
  result.active_sizes.push_back(nodes.size());

  sim::RoundStats pop_stats;
  std::vector<NodeIndex> chosen =
      pop_stage(g, result.stack, base.options(derive_seed(seed, kPopKey)), &pop_stats);
  result.stats.append(pop_stats);
  result.set = make_set(g, std::move(chosen));
  return result;
}

Algorithm default_arb_inner(double eps) {
  return boost_algorithm(heavy_algorithm(), BoostParams{eps, 8.0});
}

}  // namespace mwis

#include "mwis/simulator.hpp"

#include <bit>

namespace mwis::sim {

std::string_view to_string(Mode m) { return m == Mode::congest ? "congest" : "local"; }

std::size_t message_budget_bits(std::uint64_t n_upper, unsigned c_msg) {
  // ceil(log2 n_upper), floored at 4 so tiny graphs can still carry one
  // weight and one count per message.
  const std::size_t log_n =
      n_upper <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n_upper - 1));
  return static_cast<std::size_t>(c_msg) * std::max<std::size_t>(log_n, 4);
}

void RoundStats::append(const RoundStats& later) {
  rounds += later.rounds;
  messages_sent += later.messages_sent;
  max_message_bits = std::max(max_message_bits, later.max_message_bits);
  total_bits += later.total_bits;
  messages_per_round.insert(messages_per_round.end(), later.messages_per_round.begin(),
                            later.messages_per_round.end());
  budget_bits = std::max(budget_bits, later.budget_bits);
}

CongestViolation::CongestViolation(NodeId sender, NodeId receiver, std::size_t round,
                                   std::size_t bits, std::size_t budget)
    : EngineError("CONGEST violation: node " + std::to_string(sender) + " -> node " +
                  std::to_string(receiver) + " in round " + std::to_string(round) + " sent " +
                  std::to_string(bits) + " bits (budget " + std::to_string(budget) + ")"),
      sender_(sender),
      receiver_(receiver),
      round_(round),
      bits_(bits),
      budget_(budget) {}

RoundLimitExceeded::RoundLimitExceeded(RoundStats partial, std::size_t running)
    : EngineError("round limit " + std::to_string(partial.rounds) + " reached with " +
                  std::to_string(running) + " nodes still running"),
      partial_(std::move(partial)),
      running_(running) {}

namespace detail {

Topology Topology::build(const WeightedGraph& g, std::span<const NodeIndex> subset, bool whole) {
  Topology t;
  const std::size_t n = g.size();
  std::vector<std::int64_t> local(n, -1);
  if (whole) {
    t.nodes.resize(n);
    for (NodeIndex v = 0; v < n; ++v) t.nodes[v] = v;
  } else {
    t.nodes.assign(subset.begin(), subset.end());
    std::sort(t.nodes.begin(), t.nodes.end());
    t.nodes.erase(std::unique(t.nodes.begin(), t.nodes.end()), t.nodes.end());
    if (!t.nodes.empty() && t.nodes.back() >= n)
      throw std::invalid_argument("subgraph node index out of range");
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i) local[t.nodes[i]] = static_cast<std::int64_t>(i);

  t.offsets.assign(t.nodes.size() + 1, 0);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    std::size_t d = 0;
    for (NodeIndex u : g.neighbors(t.nodes[i]))
      if (local[u] >= 0) ++d;
    t.offsets[i + 1] = t.offsets[i] + d;
  }
  t.targets.resize(t.offsets.back());
  t.neighbor_ids.resize(t.offsets.back());
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    std::size_t k = t.offsets[i];
    for (NodeIndex u : g.neighbors(t.nodes[i])) {
      if (local[u] < 0) continue;
      t.targets[k] = static_cast<std::uint32_t>(local[u]);
      t.neighbor_ids[k] = g.id(u);
      ++k;
    }
  }
  // Neighbor lists are sorted by local index, so the reverse slot of
  // (i -> j) is the position of i within j's list.
  t.reverse.resize(t.targets.size());
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    for (std::size_t e = t.offsets[i]; e < t.offsets[i + 1]; ++e) {
      const std::uint32_t j = t.targets[e];
      auto first = t.targets.begin() + static_cast<std::ptrdiff_t>(t.offsets[j]);
      auto last = t.targets.begin() + static_cast<std::ptrdiff_t>(t.offsets[j + 1]);
      auto pos = std::lower_bound(first, last, static_cast<std::uint32_t>(i));
      t.reverse[e] = static_cast<std::uint32_t>(pos - first);
    }
  }
  return t;
}

}  // namespace detail
}  // namespace mwis::sim

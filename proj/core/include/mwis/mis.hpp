#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "mwis/graph.hpp"
#include "mwis/simulator.hpp"

namespace mwis {

/// Luby-style randomized MIS. Every active node draws a fresh 62-bit value
/// per iteration; a node joins when its value beats every active neighbor
/// (equal values: larger id wins), then joined nodes and their neighbors
/// drop out. One iteration is two rounds (values, then join notices).
/// Output: true iff the node is in the MIS.
class LubyMisProgram final : public sim::NodeProgram<bool> {
 public:
  std::unique_ptr<sim::NodeProcess<bool>> spawn(const sim::NodeContext& ctx,
                                                Rng& rng) const override;
};

const sim::NodeProgram<bool>& luby_mis_program();

enum class GreedyOrder { by_id, by_permutation };

/// Sequential greedy MIS: scan nodes in the given order and add a node iff no
/// neighbor was already added. by_permutation shuffles with `seed`.
IndependentSet greedy_mis(const WeightedGraph& g, GreedyOrder order = GreedyOrder::by_id,
                          std::uint64_t seed = 0);
/// Same, restricted to the subgraph induced by `subset`.
IndependentSet greedy_mis(const WeightedGraph& g, std::span<const NodeIndex> subset,
                          GreedyOrder order = GreedyOrder::by_id, std::uint64_t seed = 0);

struct MisCheck {
  bool ok = true;
  std::string violation;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// Checks that `candidate` is a maximal independent set of the subgraph of g
/// induced by `subset`. Reports the first violation found.
MisCheck verify_mis(const WeightedGraph& g, std::span<const NodeIndex> subset,
                    std::span<const NodeIndex> candidate);

}  // namespace mwis

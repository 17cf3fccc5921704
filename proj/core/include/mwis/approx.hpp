#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mwis/algorithm.hpp"
#include "mwis/mis.hpp"

namespace mwis {

/// What each node learns about its inclusive neighborhood N+(v).
struct LocalDegreeStats {
  std::size_t degree = 0;        // deg(v)
  std::size_t delta = 0;         // max degree over N+(v)
  Weight inclusive_weight = 0;   // sum of weights over N+(v)
  bool good = false;

  friend bool operator==(const LocalDegreeStats&, const LocalDegreeStats&) = default;
};

/// Good-node predicate 2(delta+1)*w >= s in exact integer arithmetic.
/// Zero-weight nodes are never good.
bool is_good(Weight weight, std::size_t delta, Weight inclusive_weight);

/// Two CONGEST rounds: exchange (degree, weight), then exchange the good bit
/// so every node knows which neighbors take part in the MIS call.
class LocalStatsProgram final : public sim::NodeProgram<LocalDegreeStats> {
 public:
  std::unique_ptr<sim::NodeProcess<LocalDegreeStats>> spawn(const sim::NodeContext& ctx,
                                                            Rng& rng) const override;
};

const sim::NodeProgram<LocalDegreeStats>& local_stats_program();

/// Sequential evaluation of the good set on an instance (used as a check
/// on the distributed computation).
std::vector<NodeIndex> good_nodes(const Instance& inst);
std::vector<NodeIndex> good_nodes(const WeightedGraph& g);

/// Runs the MIS black box on the subgraph induced by the good nodes.
/// Whenever that MIS is valid, 4(Delta+1) * w(I) >= w(V) over the instance.
AlgorithmRun heavy_mis_approx(const Instance& inst, std::uint64_t seed,
                              const sim::NodeProgram<bool>& mis = luby_mis_program());

Algorithm heavy_algorithm(const sim::NodeProgram<bool>& mis = luby_mis_program());

}  // namespace mwis

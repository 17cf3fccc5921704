#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mwis/algorithm.hpp"
#include "mwis/boost.hpp"

namespace mwis {

using Rank = unsigned __int128;

/// R = 100 * n_upper^(c+2), saturated at 2^128 - 1.
Rank rank_range(std::uint64_t n_upper, unsigned c);

/// One exchange round of ranks; a node joins iff its rank is strictly
/// larger than every neighbor's. Isolated nodes join without communicating.
/// With `fixed_ranks` (host-indexed) the draw is replaced by the given rank.
class BoppanaProgram final : public sim::NodeProgram<bool> {
 public:
  explicit BoppanaProgram(unsigned c, const std::vector<Rank>* fixed_ranks = nullptr);
  std::unique_ptr<sim::NodeProcess<bool>> spawn(const sim::NodeContext& ctx,
                                                Rng& rng) const override;

 private:
  unsigned c_;
  const std::vector<Rank>* fixed_;
};

/// Strict-maximum rule evaluated sequentially (host-indexed ranks).
IndependentSet boppana_rule(const WeightedGraph& g, std::span<const Rank> ranks);

/// Adds u iff none of its neighbors appeared earlier in `order`.
/// Throws std::invalid_argument if `order` is not a permutation of V.
IndependentSet seq_boppana(const WeightedGraph& g, std::span<const NodeIndex> order);

/// For every permutation of V, compares seq_boppana with the Boppana rule
/// under ranks n - position. Requires n <= 9.
bool check_perm_equivalence(const WeightedGraph& g);

/// Runs BoppanaProgram on the instance's nodes.
Algorithm boppana_algorithm(unsigned c);

/// Boost over one-round Boppana with inner constant 8.
BoostResult fast_low_degree_approx(const WeightedGraph& g, double eps, unsigned c,
                                   std::uint64_t seed, sim::SimOptions opts = {});

}  // namespace mwis

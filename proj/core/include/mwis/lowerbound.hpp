#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mwis/algorithm.hpp"

namespace mwis {

/// Cycle of n0 cliques of size n1. Clique i (1-based) is joined completely
/// to cliques i-1 and i+1 (mod n0). Vertex v_ij sits at index
/// (i-1)*n1 + (j-1); its identifier is id(u_i) followed by the bits of j-1.
struct CliqueCycle {
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  WeightedGraph graph;

  NodeIndex index(std::size_t i, std::size_t j) const {
    return static_cast<NodeIndex>((i - 1) * n1 + (j - 1));
  }
  /// 1-based clique number of a vertex.
  std::size_t clique_of(NodeIndex v) const { return v / n1 + 1; }
};

/// Unit weights; cycle ids 0..n0-1. Throws std::invalid_argument if n0 < 3
/// or n1 < 1.
CliqueCycle build_clique_cycle(std::size_t n0, std::size_t n1);
/// Same, with the given cycle identifiers in cycle order.
CliqueCycle build_clique_cycle(std::span<const NodeId> cycle_ids, std::size_t n1);

/// Cycle positions (0-based, sorted) hit by an independent set of C1.
/// Throws std::invalid_argument if `members` is not independent.
std::vector<std::size_t> map_back(const CliqueCycle& cc, std::span<const NodeIndex> members);

/// Nodes of a cycle graph in cycle order, starting at the smallest id and
/// continuing towards its smaller-id neighbor. Throws std::invalid_argument
/// if g is not a single cycle on >= 3 nodes.
std::vector<NodeIndex> cycle_order(const WeightedGraph& g);

/// Longest cyclic run of positions (out of n) not in `hits` (sorted).
std::size_t max_gap(std::size_t n, std::span<const std::size_t> hits);

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The inner algorithm returned a set that is not independent in C1.
class InvalidInnerOutput : public ReductionError {
 public:
  using ReductionError::ReductionError;
};

inline sim::SimOptions local_options() {
  sim::SimOptions o;
  o.mode = sim::Mode::local;
  return o;
}

struct RandMisParams {
  /// Approximation constant of the inner algorithm; only feeds the
  /// R_large / R_small diagnostics.
  double approx_c = 1.0;
  sim::SimOptions sim = local_options();
};

struct RandMisResult {
  IndependentSet mis;                  // S on the cycle
  std::vector<NodeIndex> mapped;       // I on the cycle, before filling
  sim::RoundStats inner_stats;
  bool inner_mis_valid = true;
  std::size_t max_gap = 0;
  double r_large = 0;
  double r_small = 0;
};

/// Builds C1 over `cycle`, runs `alg` on it, maps the result back, and
/// completes it greedily (by id) inside each component of C minus N+(I).
/// Throws InvalidInnerOutput if alg's output is not independent in C1 and
/// ReductionError if the final set is not a maximal independent set.
RandMisResult rand_mis(const WeightedGraph& cycle, const Algorithm& alg, std::size_t n1,
                       std::uint64_t seed, const RandMisParams& params = {});

}  // namespace mwis

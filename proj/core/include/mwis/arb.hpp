#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mwis/boost.hpp"

namespace mwis {

/// Nodes of `nodes` whose degree inside the subgraph induced by `nodes` is
/// at most 4*alpha.
std::vector<NodeIndex> low_degree_subgraph(const WeightedGraph& g,
                                           std::span<const NodeIndex> nodes, std::size_t alpha);

struct ArbStep {
  std::vector<Weight> weights;     // w_{i+1}, host-indexed
  std::vector<NodeIndex> nodes;    // V_{i+1}: strictly positive residuals of V_i
};

/// Sequential reference for one reduction: low-degree nodes drop to 0,
/// the rest lose the w_i weight of their neighbors in I_i.
ArbStep arb_reduce(const WeightedGraph& g, std::span<const Weight> w,
                   std::span<const NodeIndex> I, std::span<const NodeIndex> low,
                   std::span<const NodeIndex> nodes);

struct ArbParams {
  std::size_t alpha = 1;
  double eps = 0.5;
};

struct ArbResult {
  IndependentSet set;
  PhaseStack stack;
  sim::RoundStats stats;
  std::size_t phases = 0;                 // ceil(log2 n) + 1
  std::vector<std::size_t> active_sizes;  // |V_1|, ..., |V_{phases+1}|
  std::vector<std::size_t> inner_rounds;
  std::size_t max_inner_rounds = 0;
  bool mis_valid = true;
};

/// ceil(log2 n) + 1, with n >= 1.
std::size_t arb_phase_count(std::size_t n);

/// Low-degree phases followed by the shared pop stage. `inner` should be a
/// (1+eps)Delta-approximation such as boost over heavy_mis_approx.
ArbResult arb_approx(const WeightedGraph& g, const ArbParams& params, const Algorithm& inner,
                     std::uint64_t seed, sim::SimOptions opts = {});

/// The inner handle used by default: boost over heavy_mis_approx with c = 8.
Algorithm default_arb_inner(double eps);

}  // namespace mwis

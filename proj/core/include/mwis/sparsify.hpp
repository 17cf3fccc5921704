#pragma once

#include <cstdint>
#include <vector>

#include "mwis/algorithm.hpp"
#include "mwis/mis.hpp"

namespace mwis {

enum class LogBase { two, natural };

struct SparseParams {
  double lambda = 4.0;
  LogBase log_base = LogBase::two;
};

/// Per-node sampling data.
struct SamplingEntry {
  Weight weighted_degree = 0;  // w(N(v))
  Weight w_max = 0;            // max over u in N+(v) of w(N(u))
  std::size_t delta = 0;       // max degree over N+(v)
  double p = 1.0;
};

/// Indexed by host NodeIndex; entries for nodes outside the run stay default.
struct SamplingProfile {
  SparseParams params;
  std::uint64_t n_upper = 1;
  std::vector<SamplingEntry> entries;
};

/// p = min{lambda * log(n) * (1/delta + w/w_max), 1}; 1 when delta or w_max is 0.
double sampling_probability(const SparseParams& params, std::uint64_t n, std::size_t delta,
                            Weight weight, Weight w_max);

/// Two rounds: (degree, weight), then weighted degree.
class SamplingProfileProgram final : public sim::NodeProgram<SamplingEntry> {
 public:
  explicit SamplingProfileProgram(SparseParams params);
  std::unique_ptr<sim::NodeProcess<SamplingEntry>> spawn(const sim::NodeContext& ctx,
                                                         Rng& rng) const override;

 private:
  SparseParams params_;
};

/// Runs the profile program on the instance.
SamplingProfile compute_sampling_profile(const Instance& inst, const SparseParams& params,
                                         std::uint64_t seed, sim::RoundStats* stats = nullptr);

/// Sequential recomputation of the same profile from the whole instance.
SamplingProfile sampling_profile_reference(const Instance& inst, const SparseParams& params);

/// Independent Bernoulli(p(v)) draws, one stream per node. Returns V_H sorted.
std::vector<NodeIndex> sample_subgraph(const WeightedGraph& g, std::span<const NodeIndex> nodes,
                                       const SamplingProfile& profile, std::uint64_t seed);

/// Samples H and runs the good-node algorithm on it. Diagnostics carry
/// Delta_H, w(V_H) and |V_H|.
AlgorithmRun sparse_approx(const Instance& inst, const SparseParams& params, std::uint64_t seed,
                           const sim::NodeProgram<bool>& mis = luby_mis_program());

Algorithm sparse_algorithm(SparseParams params = {},
                           const sim::NodeProgram<bool>& mis = luby_mis_program());

}  // namespace mwis

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mwis/algorithm.hpp"

namespace mwis {

/// One pushed phase: I_i with the residual weights w_i(v) at push time.
struct StackFrame {
  std::size_t phase = 0;             // 1-based
  std::vector<NodeIndex> members;    // sorted
  std::vector<Weight> residual;      // residual[k] belongs to members[k]

  friend bool operator==(const StackFrame&, const StackFrame&) = default;
};

/// Frames in push order; the pop stage walks it back to front.
using PhaseStack = std::vector<StackFrame>;

/// Raised when an inner algorithm returns something that is not an
/// independent set of positive-residual nodes.
class InnerFailure : public std::runtime_error {
 public:
  InnerFailure(std::size_t phase, const std::string& what);
  std::size_t phase() const { return phase_; }

 private:
  std::size_t phase_;
};

/// w_{i+1}(v) = 0 on I, w_i(v) - sum of w_i over N(v) ∩ I elsewhere.
/// Throws std::invalid_argument if I is not independent and
/// WeightOverflowError on overflow.
ResidualWeights reduce_weights(const WeightedGraph& g, const ResidualWeights& w,
                               std::span<const NodeIndex> members);

/// One-round distributed reduction: members announce w_i, everybody else
/// subtracts. `zeroed` (optional, host-indexed) marks further nodes whose
/// residual drops to 0. Output: the node's new residual.
class ReductionProgram final : public sim::NodeProgram<Weight> {
 public:
  ReductionProgram(const std::vector<char>& in_set, const std::vector<char>* zeroed = nullptr)
      : in_set_(&in_set), zeroed_(zeroed) {}
  std::unique_ptr<sim::NodeProcess<Weight>> spawn(const sim::NodeContext& ctx,
                                                  Rng& rng) const override;

 private:
  const std::vector<char>* in_set_;
  const std::vector<char>* zeroed_;
};

/// Distributed pop stage: round r settles frame t-r+1. A node joins I
/// unless a neighbor joined in an earlier round.
class PopProgram final : public sim::NodeProgram<bool> {
 public:
  PopProgram(const std::vector<std::size_t>& frame_of, std::size_t frames)
      : frame_of_(&frame_of), frames_(frames) {}
  std::unique_ptr<sim::NodeProcess<bool>> spawn(const sim::NodeContext& ctx,
                                                Rng& rng) const override;

 private:
  const std::vector<std::size_t>* frame_of_;  // 1-based frame per host node, 0 = none
  std::size_t frames_;
};

/// Sequential pop stage (reference for PopProgram).
std::vector<NodeIndex> pop_stack(const WeightedGraph& g, const PhaseStack& stack);

/// Runs the distributed pop stage and returns I (sorted host indices).
std::vector<NodeIndex> pop_stage(const WeightedGraph& g, const PhaseStack& stack,
                                 const sim::SimOptions& opts, sim::RoundStats* stats);

/// w(I) >= sum over frames of sum of w_i(v) for v in I_i, with w the input
/// weights seen by the first phase.
bool check_stack_property(std::span<const Weight> weights, std::span<const NodeIndex> I,
                          const PhaseStack& stack);
bool check_stack_property(const WeightedGraph& g, const IndependentSet& I,
                          const PhaseStack& stack);

/// Every v in every frame has a member of I in N+(v).
bool check_stack_cover(const WeightedGraph& g, std::span<const NodeIndex> I,
                       const PhaseStack& stack);

struct BoostParams {
  double eps = 0.5;
  double c = 8.0;
};

/// t = ceil(c / eps), guarding against binary fractions like 8/0.1.
std::size_t phase_count(const BoostParams& params);

struct BoostResult {
  IndependentSet set;            // weight uses the instance's starting weights
  PhaseStack stack;
  sim::RoundStats stats;
  std::size_t phases = 0;
  std::vector<std::size_t> inner_rounds;
  std::size_t max_inner_rounds = 0;
  std::size_t pop_rounds = 0;
  bool mis_valid = true;
};

/// Local-ratio boosting. Phase i runs `inner` on the nodes of the instance
/// whose residual is positive, pushes its output and reduces the weights;
/// then frames are popped newest first.
BoostResult boost(const Instance& inst, const Algorithm& inner, const BoostParams& params,
                  std::uint64_t seed);
BoostResult boost(const WeightedGraph& g, const Algorithm& inner, const BoostParams& params,
                  std::uint64_t seed, sim::SimOptions opts = {});

Algorithm boost_algorithm(Algorithm inner, BoostParams params);

}  // namespace mwis

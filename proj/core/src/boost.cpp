#include "mwis/boost.hpp"

#include <algorithm>
#include <cmath>

namespace mwis {
namespace {

constexpr std::uint64_t kReduceKey = 0x72656475;
constexpr std::uint64_t kPopKey = 0x706f70;

class ReductionProcess final : public sim::NodeProcess<Weight> {
 public:
  ReductionProcess(const sim::NodeContext& ctx, bool member, bool zeroed)
      : NodeProcess(ctx), member_(member), zeroed_(zeroed || member) {
    if (ctx.degree() == 0) halt(zeroed_ ? 0 : ctx.weight);
  }

  void send(sim::Outbox& out, Rng&) override {
    if (member_) {
      out.broadcast(sim::MessageWriter().sint(context().weight).finish());
      halt(0);
    }
  }

  void receive(const sim::Inbox& in, Rng&) override {
    if (zeroed_) {
      halt(0);
      return;
    }
    Weight w = context().weight;
    in.for_each([&](std::size_t, const sim::Message& m) {
      w = checked_sub(w, sim::MessageReader(m).sint());
    });
    halt(w);
  }

 private:
  bool member_;
  bool zeroed_;
};

class PopProcess final : public sim::NodeProcess<bool> {
 public:
  PopProcess(const sim::NodeContext& ctx, std::size_t frame, std::size_t frames)
      : NodeProcess(ctx), turn_(frame == 0 ? 0 : frames - frame + 1) {
    if (frame == 0) halt(false);
  }

  void send(sim::Outbox& out, Rng&) override {
    if (++round_ != turn_) return;
    if (!blocked_) out.broadcast(sim::MessageWriter().flag(true).finish());
    halt(!blocked_);
  }

  void receive(const sim::Inbox& in, Rng&) override {
    if (in.any()) blocked_ = true;
  }

 private:
  std::size_t turn_;
  std::size_t round_ = 0;
  bool blocked_ = false;
};

}  // namespace

InnerFailure::InnerFailure(std::size_t phase, const std::string& what)
    : std::runtime_error("inner algorithm failed in phase " + std::to_string(phase) + ": " + what),
      phase_(phase) {}

ResidualWeights reduce_weights(const WeightedGraph& g, const ResidualWeights& w,
                               std::span<const NodeIndex> members) {
  if (!is_independent(g, members)) throw std::invalid_argument("reduction set is not independent");
  ResidualWeights next{w.phase + 1, w.values};
  for (NodeIndex u : members) {
    for (NodeIndex v : g.neighbors(u)) next.values[v] = checked_sub(next.values[v], w.values[u]);
  }
  for (NodeIndex u : members) next.values[u] = 0;
  return next;
}

std::unique_ptr<sim::NodeProcess<Weight>> ReductionProgram::spawn(const sim::NodeContext& ctx,
                                                                  Rng&) const {
  const bool member = (*in_set_)[ctx.index] != 0;
  const bool zeroed = zeroed_ != nullptr && (*zeroed_)[ctx.index] != 0;
  return std::make_unique<ReductionProcess>(ctx, member, zeroed);
}

std::unique_ptr<sim::NodeProcess<bool>> PopProgram::spawn(const sim::NodeContext& ctx,
                                                          Rng&) const {
  return std::make_unique<PopProcess>(ctx, (*frame_of_)[ctx.index], frames_);
}

std::vector<NodeIndex> pop_stack(const WeightedGraph& g, const PhaseStack& stack) {
  std::vector<char> in(g.size(), 0);
  std::vector<NodeIndex> chosen;
  for (auto frame = stack.rbegin(); frame != stack.rend(); ++frame) {
    std::vector<NodeIndex> joining;
    for (NodeIndex v : frame->members) {
      const auto nbrs = g.neighbors(v);
      if (std::none_of(nbrs.begin(), nbrs.end(), [&](NodeIndex u) { return in[u] != 0; }))
        joining.push_back(v);
    }
    for (NodeIndex v : joining) {
      in[v] = 1;
      chosen.push_back(v);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<NodeIndex> pop_stage(const WeightedGraph& g, const PhaseStack& stack,
                                 const sim::SimOptions& opts, sim::RoundStats* stats) {
  std::vector<std::size_t> frame_of(g.size(), 0);
  std::vector<NodeIndex> nodes;
  for (std::size_t f = 0; f < stack.size(); ++f) {
    for (NodeIndex v : stack[f].members) {
      if (frame_of[v] != 0) throw std::invalid_argument("node pushed in two frames");
      frame_of[v] = f + 1;
      nodes.push_back(v);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  const PopProgram program(frame_of, stack.size());
  auto run = sim::run_on_subgraph(g, nodes, program, opts);
  std::vector<NodeIndex> chosen;
  for (NodeIndex v : nodes)
    if (run.outputs[v].value_or(false)) chosen.push_back(v);
  if (stats != nullptr) *stats = std::move(run.stats);
  return chosen;
}

bool check_stack_property(std::span<const Weight> weights, std::span<const NodeIndex> I,
                          const PhaseStack& stack) {
  __int128 pushed = 0;
  for (const auto& frame : stack)
    for (Weight r : frame.residual) pushed += r;
  __int128 got = 0;
  for (NodeIndex v : I) got += weights[v];
  return got >= pushed;
}

bool check_stack_property(const WeightedGraph& g, const IndependentSet& I,
                          const PhaseStack& stack) {
  return check_stack_property(g.weights(), I.members, stack);
}

bool check_stack_cover(const WeightedGraph& g, std::span<const NodeIndex> I,
                       const PhaseStack& stack) {
  std::vector<char> in(g.size(), 0);
  for (NodeIndex v : I) in[v] = 1;
  for (const auto& frame : stack) {
    for (NodeIndex v : frame.members) {
      if (in[v]) continue;
      const auto nbrs = g.neighbors(v);
      if (std::none_of(nbrs.begin(), nbrs.end(), [&](NodeIndex u) { return in[u] != 0; }))
        return false;
    }
  }
  return true;
}

std::size_t phase_count(const BoostParams& params) {
  if (!(params.eps > 0) || !std::isfinite(params.eps))
    throw std::invalid_argument("eps must be a positive number");
  if (!(params.c >= 1) || !std::isfinite(params.c)) throw std::invalid_argument("c must be >= 1");
  const double x = params.c / params.eps;
  if (x > 1e7) throw std::invalid_argument("c/eps is too large");
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, x)) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(x));
}

BoostResult boost(const Instance& inst, const Algorithm& inner, const BoostParams& params,
                  std::uint64_t seed) {
  const WeightedGraph& g = *inst.graph;
  BoostResult result;
  result.phases = phase_count(params);
  std::vector<Weight> w = inst.weights;
  std::vector<char> mark(g.size(), 0);

  for (std::size_t i = 1; i <= result.phases; ++i) {
    Instance sub;
    sub.graph = &g;
    sub.weights = w;
    sub.sim = inst.sim;
    for (NodeIndex v : inst.nodes)
      if (w[v] > 0) sub.nodes.push_back(v);

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
                                  " without positive residual weight");
      frame.residual.push_back(w[v]);
    }
    if (!is_independent(g, frame.members)) throw InnerFailure(i, "output is not independent");

    if (!sub.nodes.empty()) {
      for (NodeIndex v : frame.members) mark[v] = 1;
      const ReductionProgram program(mark);
      auto red = sim::run_on_subgraph(g, sub.nodes, program,
                                      inst.options(derive_seed(seed, kReduceKey + i)), w);
      for (NodeIndex v : sub.nodes) w[v] = *red.outputs[v];
      for (NodeIndex v : frame.members) mark[v] = 0;
      result.stats.append(red.stats);
    }
    result.stack.push_back(std::move(frame));
  }

  sim::RoundStats pop_stats;
  std::vector<NodeIndex> chosen =
      pop_stage(g, result.stack, inst.options(derive_seed(seed, kPopKey)), &pop_stats);
  result.pop_rounds = pop_stats.rounds;
  result.stats.append(pop_stats);
  result.set.weight = sum_over(inst.weights, chosen);
  result.set.members = std::move(chosen);
  return result;
}

BoostResult boost(const WeightedGraph& g, const Algorithm& inner, const BoostParams& params,
                  std::uint64_t seed, sim::SimOptions opts) {
  return boost(Instance::whole(g, opts), inner, params, seed);
}

Algorithm boost_algorithm(Algorithm inner, BoostParams params) {
  return [inner = std::move(inner), params](const Instance& inst, std::uint64_t seed) {
    BoostResult r = boost(inst, inner, params, seed);
    AlgorithmRun out;
    out.members = std::move(r.set.members);
    out.stats = std::move(r.stats);
    out.mis_valid = r.mis_valid;
    return out;
  };
}

}  // namespace mwis

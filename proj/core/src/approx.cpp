#include "mwis/approx.hpp"

#include <algorithm>

namespace mwis {
namespace {

class LocalStatsProcess final : public sim::NodeProcess<LocalDegreeStats> {
 public:
  explicit LocalStatsProcess(const sim::NodeContext& ctx) : NodeProcess(ctx) {
    stats_.degree = ctx.degree();
    stats_.delta = ctx.degree();
    stats_.inclusive_weight = ctx.weight;
    if (ctx.degree() == 0) {
      stats_.good = is_good(ctx.weight, 0, ctx.weight);
      halt(stats_);
    }
  }

  void send(sim::Outbox& out, Rng&) override {
    if (round_ == 0) {
      out.broadcast(
          sim::MessageWriter().uint(stats_.degree).sint(context().weight).finish());
    } else {
      out.broadcast(sim::MessageWriter().flag(stats_.good).finish());
    }
  }

  void receive(const sim::Inbox& in, Rng&) override {
    if (round_++ == 0) {
      in.for_each([&](std::size_t, const sim::Message& m) {
        sim::MessageReader r(m);
        stats_.delta = std::max<std::size_t>(stats_.delta, r.uint());
        stats_.inclusive_weight = checked_add(stats_.inclusive_weight, r.sint());
      });
      stats_.good = is_good(context().weight, stats_.delta, stats_.inclusive_weight);
      return;
    }
    halt(stats_);
  }

 private:
  int round_ = 0;
  LocalDegreeStats stats_;
};

}  // namespace

bool is_good(Weight weight, std::size_t delta, Weight inclusive_weight) {
  if (weight <= 0) return false;
  const __int128 lhs = static_cast<__int128>(2) * (static_cast<__int128>(delta) + 1) * weight;
  return lhs >= static_cast<__int128>(inclusive_weight);
}

std::unique_ptr<sim::NodeProcess<LocalDegreeStats>> LocalStatsProgram::spawn(
    const sim::NodeContext& ctx, Rng&) const {
  return std::make_unique<LocalStatsProcess>(ctx);
}

const sim::NodeProgram<LocalDegreeStats>& local_stats_program() {
  static const LocalStatsProgram program;
  return program;
}

std::vector<NodeIndex> good_nodes(const Instance& inst) {
  const WeightedGraph& g = *inst.graph;
  std::vector<char> active(g.size(), 0);
  for (NodeIndex v : inst.nodes) active[v] = 1;
  auto active_degree = [&](NodeIndex v) {
    std::size_t d = 0;
    for (NodeIndex u : g.neighbors(v)) d += active[u] ? 1 : 0;
    return d;
  };
  std::vector<NodeIndex> good;
  for (NodeIndex v : inst.nodes) {
    std::size_t delta = active_degree(v);
    Weight s = inst.weights[v];
    for (NodeIndex u : g.neighbors(v)) {
      if (!active[u]) continue;
      delta = std::max(delta, active_degree(u));
      s = checked_add(s, inst.weights[u]);
    }
    if (is_good(inst.weights[v], delta, s)) good.push_back(v);
  }
  return good;
}

std::vector<NodeIndex> good_nodes(const WeightedGraph& g) { return good_nodes(Instance::whole(g)); }

AlgorithmRun heavy_mis_approx(const Instance& inst, std::uint64_t seed,
                              const sim::NodeProgram<bool>& mis) {
  const WeightedGraph& g = *inst.graph;
  auto stats_run = sim::run_on_subgraph(g, inst.nodes, local_stats_program(),
                                        inst.options(derive_seed(seed, 1)), inst.weights);
  std::vector<NodeIndex> good;
  for (NodeIndex v : inst.nodes)
    if (stats_run.outputs[v] && stats_run.outputs[v]->good) good.push_back(v);

  auto mis_run = sim::run_on_subgraph(g, good, mis, inst.options(derive_seed(seed, 2)), inst.weights);
  AlgorithmRun out;
  for (NodeIndex v : good)
    if (mis_run.outputs[v].value_or(false)) out.members.push_back(v);
  out.mis_valid = verify_mis(g, good, out.members).ok;
  out.stats = std::move(stats_run.stats);
  out.stats.append(mis_run.stats);
  return out;
}

Algorithm heavy_algorithm(const sim::NodeProgram<bool>& mis) {
  return [&mis](const Instance& inst, std::uint64_t seed) { return heavy_mis_approx(inst, seed, mis); };
}

}  // namespace mwis

#include "mwis/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mwis/approx.hpp"

namespace mwis {
namespace {

constexpr std::uint64_t kSampleKey = 0x73616d70;

class ProfileProcess final : public sim::NodeProcess<SamplingEntry> {
 public:
  ProfileProcess(const sim::NodeContext& ctx, const SparseParams& params)
      : NodeProcess(ctx), params_(params) {
    entry_.delta = ctx.degree();
    if (ctx.degree() == 0) {
      entry_.p = 1.0;
      halt(entry_);
    }
  }

  void send(sim::Outbox& out, Rng&) override {
    if (round_ == 0) {
      out.broadcast(sim::MessageWriter().uint(context().degree()).sint(context().weight).finish());
    } else {
      out.broadcast(sim::MessageWriter().sint(entry_.weighted_degree).finish());
    }
  }

  void receive(const sim::Inbox& in, Rng&) override {
    if (round_++ == 0) {
      in.for_each([&](std::size_t, const sim::Message& m) {
        sim::MessageReader r(m);
        entry_.delta = std::max<std::size_t>(entry_.delta, r.uint());
        entry_.weighted_degree = checked_add(entry_.weighted_degree, r.sint());
      });
      entry_.w_max = entry_.weighted_degree;
      return;
    }
    in.for_each([&](std::size_t, const sim::Message& m) {
      entry_.w_max = std::max(entry_.w_max, sim::MessageReader(m).sint());
    });
    entry_.p = sampling_probability(params_, context().n_upper, entry_.delta, context().weight,
                                    entry_.w_max);
    halt(entry_);
  }

 private:
  SparseParams params_;
  int round_ = 0;
  SamplingEntry entry_;
};

}  // namespace

double sampling_probability(const SparseParams& params, std::uint64_t n, std::size_t delta,
                            Weight weight, Weight w_max) {
  if (!(params.lambda > 0)) throw std::invalid_argument("lambda must be positive");
  if (delta == 0 || w_max <= 0) return 1.0;
  const double nn = static_cast<double>(std::max<std::uint64_t>(n, 1));
  const double log_n = params.log_base == LogBase::two ? std::log2(nn) : std::log(nn);
  const double raw = params.lambda * log_n *
                     (1.0 / static_cast<double>(delta) +
                      static_cast<double>(weight) / static_cast<double>(w_max));
  return std::clamp(raw, 0.0, 1.0);
}

SamplingProfileProgram::SamplingProfileProgram(SparseParams params) : params_(params) {
  if (!(params_.lambda > 0)) throw std::invalid_argument("lambda must be positive");
}

std::unique_ptr<sim::NodeProcess<SamplingEntry>> SamplingProfileProgram::spawn(
    const sim::NodeContext& ctx, Rng&) const {
  return std::make_unique<ProfileProcess>(ctx, params_);
}

SamplingProfile compute_sampling_profile(const Instance& inst, const SparseParams& params,
                                         std::uint64_t seed, sim::RoundStats* stats) {
  const WeightedGraph& g = *inst.graph;
  const SamplingProfileProgram program(params);
  auto run = sim::run_on_subgraph(g, inst.nodes, program, inst.options(seed), inst.weights);
  SamplingProfile profile;
  profile.params = params;
  profile.n_upper = inst.sim.n_upper.value_or(std::max<std::uint64_t>(g.size(), 1));
  profile.entries.resize(g.size());
  for (NodeIndex v : inst.nodes) profile.entries[v] = *run.outputs[v];
  if (stats != nullptr) *stats = std::move(run.stats);
  return profile;
}

SamplingProfile sampling_profile_reference(const Instance& inst, const SparseParams& params) {
  const WeightedGraph& g = *inst.graph;
  std::vector<char> active(g.size(), 0);
  for (NodeIndex v : inst.nodes) active[v] = 1;
  std::vector<std::size_t> deg(g.size(), 0);
  std::vector<Weight> wdeg(g.size(), 0);
  for (NodeIndex v : inst.nodes) {
    for (NodeIndex u : g.neighbors(v)) {
      if (!active[u]) continue;
      ++deg[v];
      wdeg[v] = checked_add(wdeg[v], inst.weights[u]);
    }
  }
  SamplingProfile profile;
  profile.params = params;
  profile.n_upper = inst.sim.n_upper.value_or(std::max<std::uint64_t>(g.size(), 1));
  profile.entries.resize(g.size());
  for (NodeIndex v : inst.nodes) {
    SamplingEntry& e = profile.entries[v];
    e.weighted_degree = wdeg[v];
    e.delta = deg[v];
    e.w_max = wdeg[v];
    for (NodeIndex u : g.neighbors(v)) {
      if (!active[u]) continue;
      e.delta = std::max(e.delta, deg[u]);
      e.w_max = std::max(e.w_max, wdeg[u]);
    }
    e.p = deg[v] == 0 ? 1.0
                      : sampling_probability(params, profile.n_upper, e.delta, inst.weights[v],
                                             e.w_max);
  }
  return profile;
}

std::vector<NodeIndex> sample_subgraph(const WeightedGraph& g, std::span<const NodeIndex> nodes,
                                       const SamplingProfile& profile, std::uint64_t seed) {
  const std::uint64_t master = derive_seed(seed, kSampleKey);
  std::vector<NodeIndex> chosen;
  for (NodeIndex v : nodes) {
    Rng rng = make_stream(master, g.id(v));
    if (uniform01(rng) < profile.entries[v].p) chosen.push_back(v);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

AlgorithmRun sparse_approx(const Instance& inst, const SparseParams& params, std::uint64_t seed,
                           const sim::NodeProgram<bool>& mis) {
  sim::RoundStats profile_stats;
  const SamplingProfile profile =
      compute_sampling_profile(inst, params, derive_seed(seed, 1), &profile_stats);

  Instance sampled = inst;
  sampled.nodes = sample_subgraph(*inst.graph, inst.nodes, profile, derive_seed(seed, 2));

  AlgorithmRun out = heavy_mis_approx(sampled, derive_seed(seed, 3), mis);
  profile_stats.append(out.stats);
  out.stats = std::move(profile_stats);
  out.diagnostics.sampled_max_degree = sampled.max_degree();
  out.diagnostics.sampled_weight = sampled.active_weight();
  out.diagnostics.sampled_nodes = sampled.nodes.size();
  return out;
}

Algorithm sparse_algorithm(SparseParams params, const sim::NodeProgram<bool>& mis) {
  return [params, &mis](const Instance& inst, std::uint64_t seed) {
    return sparse_approx(inst, params, seed, mis);
  };
}

}  // namespace mwis

#include "mwis/ranking.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace mwis {
namespace {

constexpr Rank kRankMax = ~Rank{0};

class BoppanaProcess final : public sim::NodeProcess<bool> {
 public:
  BoppanaProcess(const sim::NodeContext& ctx, Rank rank) : NodeProcess(ctx), rank_(rank) {
    if (ctx.degree() == 0) halt(true);
  }

  void send(sim::Outbox& out, Rng&) override {
    out.broadcast(sim::MessageWriter().u128(rank_).finish());
  }

  void receive(const sim::Inbox& in, Rng&) override {
    bool top = true;
    in.for_each([&](std::size_t, const sim::Message& m) {
      if (sim::MessageReader(m).u128() >= rank_) top = false;
    });
    halt(top);
  }

 private:
  Rank rank_;
};

}  // namespace

Rank rank_range(std::uint64_t n_upper, unsigned c) {
  Rank r = 100;
  const Rank n = std::max<std::uint64_t>(n_upper, 1);
  for (unsigned k = 0; k < c + 2; ++k) {
    if (r > kRankMax / n) return kRankMax;
    r *= n;
  }
  return r;
}

BoppanaProgram::BoppanaProgram(unsigned c, const std::vector<Rank>* fixed_ranks)
    : c_(c), fixed_(fixed_ranks) {
  if (c < 1) throw std::invalid_argument("ranking constant c must be >= 1");
}

std::unique_ptr<sim::NodeProcess<bool>> BoppanaProgram::spawn(const sim::NodeContext& ctx,
                                                              Rng& rng) const {
  const Rank rank =
      fixed_ != nullptr ? (*fixed_)[ctx.index] : uniform_rank(rng, rank_range(ctx.n_upper, c_));
  return std::make_unique<BoppanaProcess>(ctx, rank);
}

IndependentSet boppana_rule(const WeightedGraph& g, std::span<const Rank> ranks) {
  std::vector<NodeIndex> chosen;
  for (NodeIndex v = 0; v < g.size(); ++v) {
    const auto nbrs = g.neighbors(v);
    if (std::all_of(nbrs.begin(), nbrs.end(), [&](NodeIndex u) { return ranks[v] > ranks[u]; }))
      chosen.push_back(v);
  }
  return make_set(g, std::move(chosen));
}

IndependentSet seq_boppana(const WeightedGraph& g, std::span<const NodeIndex> order) {
  if (order.size() != g.size()) throw std::invalid_argument("order is not a permutation");
  std::vector<char> seen(g.size(), 0);
  std::vector<NodeIndex> chosen;
  for (NodeIndex u : order) {
    if (u >= g.size() || seen[u]) throw std::invalid_argument("order is not a permutation");
    const auto nbrs = g.neighbors(u);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](NodeIndex v) { return seen[v] != 0; }))
      chosen.push_back(u);
    seen[u] = 1;
  }
  return make_set(g, std::move(chosen));
}

bool check_perm_equivalence(const WeightedGraph& g) {
  const std::size_t n = g.size();
  if (n > 9) throw std::invalid_argument("permutation check is limited to 9 nodes");
  std::vector<NodeIndex> order(n);
  std::iota(order.begin(), order.end(), NodeIndex{0});
  std::vector<Rank> ranks(n);
  do {
    for (std::size_t pos = 0; pos < n; ++pos) ranks[order[pos]] = n - pos;
    if (seq_boppana(g, order) != boppana_rule(g, ranks)) return false;
  } while (std::next_permutation(order.begin(), order.end()));
  return true;
}

Algorithm boppana_algorithm(unsigned c) {
  auto program = std::make_shared<BoppanaProgram>(c);
  return [program](const Instance& inst, std::uint64_t seed) {
    auto run = sim::run_on_subgraph(*inst.graph, inst.nodes, *program, inst.options(seed),
                                    inst.weights);
    AlgorithmRun out;
    for (NodeIndex v : inst.nodes)
      if (run.outputs[v].value_or(false)) out.members.push_back(v);
    out.stats = std::move(run.stats);
    return out;
  };
}

BoostResult fast_low_degree_approx(const WeightedGraph& g, double eps, unsigned c,
                                   std::uint64_t seed, sim::SimOptions opts) {
  return boost(g, boppana_algorithm(c), BoostParams{eps, 8.0}, seed, opts);
}

}  // namespace mwis
